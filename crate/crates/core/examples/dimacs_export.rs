//! Writes a coloring problem as CNF and checks it against the search engine.
//!
//! ```bash
//! cargo run --release --example dimacs_export
//! ```

use rado::lattice::Mask;
use rado::search::{
    decode_model, export_dimacs, find_avoiding_coloring, solve_cnf, verify_witness, SearchConfig, SearchProblem,
};
use rado::systems::{ScalarSystem, VectorSystem};

fn main() -> rado::Result<()> {
    let ap = VectorSystem::new(vec![ScalarSystem::new(vec![vec![-1, 1, 0, -1], vec![0, -1, 1, -1]])?])?;
    let problem = SearchProblem::new(ap, 2, Mask::new([0, 1, 2], 4)?)?;
    let config = SearchConfig::default();
    for n in [8, 9] {
        let cnf = export_dimacs(&problem, n, &config)?;
        let sat = solve_cnf(&cnf);
        let engine = find_avoiding_coloring(&problem, n, &config)?;
        println!(
            "n = {n}: {} vars, {} clauses, sat = {}, engine avoidable = {}",
            cnf.num_vars,
            cnf.clauses.len(),
            sat.is_some(),
            engine.witness.is_some()
        );
        if let Some(model) = sat {
            let w = decode_model(&model, n, 1, 2)?;
            println!(
                "  decoded coloring {:?} verifies: {}",
                w.colors,
                verify_witness(&problem, &w, config.budget)?.passes
            );
        }
    }
    print!("{}", export_dimacs(&problem, 4, &config)?.to_dimacs());
    Ok(())
}
