//! Solutions of `p_1 + .. + p_k = q_1 + .. + q_l` in `N^d` built from
//! moment vectors `(i, i^2, .., i^d)`.
//!
//! ```bash
//! cargo run --example vandermonde_solution
//! ```

use rado::construct::{build_observation_solution, check_observation, ObservationInput};

fn main() -> rado::Result<()> {
    let (k, l, d) = (3, 2, 2);
    let input = ObservationInput::new(vec![1, 2, 4, 8, 16], k, l, d)?;
    let sol = build_observation_solution(&input);
    for (name, pts) in [("p", &sol.p_points), ("q", &sol.q_points)] {
        for (i, p) in pts.iter().enumerate() {
            let coords: Vec<String> = p.iter().map(ToString::to_string).collect();
            println!("{name}_{} = ({})", i + 1, coords.join(", "));
        }
    }
    println!("{:?}", check_observation(&sol, d, k, l));
    Ok(())
}
