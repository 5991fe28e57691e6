//! Two-dimensional Schur triples `p_1 + p_2 = p_3` with the degenerate
//! ones (all three points on one ray) excluded.
//!
//! ```bash
//! cargo run --release --example nondegenerate_schur
//! ```

use rado::lattice::{count_degenerate, count_solutions, Mask, DEFAULT_BUDGET};
use rado::search::{rado_number, DegeneracyFilter, RadoNumber, SearchConfig, SearchProblem};
use rado::systems::{ScalarSystem, VectorSystem};

fn main() -> rado::Result<()> {
    let schur = ScalarSystem::new(vec![vec![1, 1, -1]])?;
    let system = VectorSystem::diagonal(schur, 2)?;
    let mask = Mask::all(3);

    println!("{:>4} {:>10} {:>10} {:>12}", "n", "solutions", "degenerate", "n^3 H_n");
    for n in [5, 10, 20, 30] {
        let total = count_solutions(&system, n, DEFAULT_BUDGET)?;
        let degenerate = count_degenerate(&system, n, &mask, DEFAULT_BUDGET)?;
        let harmonic: f64 = (1..=n).map(|q| 1.0 / q as f64).sum();
        println!(
            "{n:>4} {total:>10} {degenerate:>10} {:>12.0}",
            (n as f64).powi(3) * harmonic
        );
    }

    let config = SearchConfig::default();
    let all = SearchProblem::new(system, 2, mask)?;
    let nondegenerate = all.clone().with_degeneracy(DegeneracyFilter::NondegenerateOnly);
    for (label, p) in [("all solutions", &all), ("non-degenerate only", &nondegenerate)] {
        match rado_number(p, 16, &config)? {
            RadoNumber::Found { n, .. } => println!("{label}: every 2-coloring of [1,{n}]^2 is forced"),
            RadoNumber::ExceededMax { max_n, .. } => println!("{label}: avoidable up to {max_n}"),
        }
    }
    Ok(())
}
