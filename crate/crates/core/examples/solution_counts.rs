//! Solution counts in `[1,n]^d` grow like `n` to the number of free columns.
//!
//! ```bash
//! cargo run --release --example solution_counts
//! ```

use rado::lattice::{count_solutions, enumerate_vector_solutions, DEFAULT_BUDGET};
use rado::systems::{growth_exponent, parse_system, ScalarSystem, VectorSystem};

fn main() -> rado::Result<()> {
    let schur = VectorSystem::diagonal(ScalarSystem::new(vec![vec![1, 1, -1]])?, 2)?;
    println!("x + y = z in [1,2]^2:");
    for t in enumerate_vector_solutions(&schur, 2)? {
        println!(
            "  {:?}",
            t.points().iter().map(|p| p.coords().to_vec()).collect::<Vec<_>>()
        );
    }

    let motivating = parse_system(include_str!("../data/motivating.json"))?;
    for (name, v, n) in [
        ("diagonal x + y = z, d = 2", &schur, 50),
        ("motivating system", &motivating, 19),
    ] {
        let e = growth_exponent(v);
        let a = count_solutions(v, n, DEFAULT_BUDGET)?;
        let b = count_solutions(v, 2 * n, DEFAULT_BUDGET)?;
        println!(
            "{name}: count({n}) = {a}, count({}) = {b}, log2 ratio {:.3}, exponent {e}",
            2 * n,
            (b as f64 / a as f64).log2()
        );
    }
    Ok(())
}
