//! (m,p,c)-sets: generation, monochromatic sets in a random coloring, and
//! the embedding of an (M,P,c^mu)-set in an (M,c^(t-mu)P,c^t)-set.
//!
//! ```bash
//! cargo run --example mpc_sets
//! ```

use rado::lattice::Coloring;
use rado::mpc::{find_mono_mpc, generate_mpc, lemma_mpc_embed, mpc_contains_solution, McGenerators, MpcSpec};
use rado::systems::ScalarSystem;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> rado::Result<()> {
    let spec = MpcSpec::new(2, 1, 1)?;
    let set = generate_mpc(&spec, &McGenerators(vec![5, 1]))?;
    println!("(2,1,1)-set from (5,1): {set:?}");
    let schur = ScalarSystem::new(vec![vec![1, 1, -1]])?;
    println!(
        "contains x + y = z: {:?}",
        mpc_contains_solution(&spec, &McGenerators(vec![5, 1]), &schur)?
    );

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let coloring = Coloring::new(40, 1, 2, (0..40).map(|_| rng.gen_range(0..2)).collect())?;
    match find_mono_mpc(&coloring, &spec)? {
        Some(g) => println!(
            "random 2-coloring of [1,40]: generators {:?} give {:?}",
            g.0,
            generate_mpc(&spec, &g)?
        ),
        None => println!("random 2-coloring of [1,40]: none"),
    }

    let g = McGenerators(vec![7, 2]);
    let h = lemma_mpc_embed(2, 1, 2, 1, 3, &g)?;
    let outer = generate_mpc(&MpcSpec::new(2, 4, 8)?, &g)?;
    let inner = generate_mpc(&MpcSpec::new(2, 1, 2)?, &h)?;
    println!("(2,1,2)-set from {:?}: {inner:?}", h.0);
    println!(
        "lies inside the (2,4,8)-set from {:?}: {}",
        g.0,
        inner.iter().all(|x| outer.binary_search(x).is_ok())
    );
    Ok(())
}
