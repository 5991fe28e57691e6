//! Smallest `n` such that every 2-coloring of `[1,n]^2` contains points
//! `(a,x), (b,x+d), (a+b,x+2d)` of one color.
//!
//! ```bash
//! cargo run --release --example motivating_question
//! ```

use std::time::Instant;

use rado::lattice::Mask;
use rado::search::{
    build_constraints, find_avoiding_coloring, rado_number, verify_witness, SearchConfig, SearchProblem,
};
use rado::systems::{ScalarSystem, VectorSystem};

fn main() -> rado::Result<()> {
    // First coordinates: a_1 + a_2 = a_3 (a_4 is a dummy).
    let schur = ScalarSystem::new(vec![vec![1, 1, -1, 0]])?;
    // Second coordinates: b_1, b_2, b_3 in progression with difference b_4.
    let ap = ScalarSystem::new(vec![vec![-1, 1, 0, -1], vec![0, -1, 1, -1]])?;
    let system = VectorSystem::new(vec![schur, ap])?;
    let problem = SearchProblem::new(system, 2, Mask::new([0, 1, 2], 4)?)?;
    let config = SearchConfig::default();

    let cs = build_constraints(&problem, 9, config.budget)?;
    println!("[1,9]^2: {} configurations, {} constraints", cs.raw_count, cs.len());

    let start = Instant::now();
    let answer = rado_number(&problem, 12, &config)?;
    println!("rado number: {:?} ({:.2?})", answer.value(), start.elapsed());

    let at8 = find_avoiding_coloring(&problem, 8, &config)?;
    let w = at8.witness.expect("[1,8]^2 is avoidable");
    println!("avoiding coloring of [1,8]^2 (row = first coordinate, column = second):");
    for x in 0..8 {
        let row: String = w.colors[x * 8..(x + 1) * 8]
            .iter()
            .map(|&c| if c == 0 { '.' } else { '#' })
            .collect();
        println!("  {row}");
    }
    println!(
        "witness verifies: {}",
        verify_witness(&problem, &w, config.budget)?.passes
    );
    let at9 = find_avoiding_coloring(&problem, 9, &config)?;
    println!("[1,9]^2: {:?} after {} nodes", at9.status, at9.nodes);
    Ok(())
}
