//! Which small systems are partition regular.
//!
//! ```bash
//! cargo run --example columns_condition
//! ```

use rado::systems::{check_columns_condition, ScalarSystem};

fn main() -> rado::Result<()> {
    let cases: [(&str, Vec<Vec<i64>>); 6] = [
        ("x + y = z", vec![vec![1, 1, -1]]),
        ("x + y = 3z", vec![vec![1, 1, -3]]),
        ("x + y = w + z", vec![vec![1, 1, -1, -1]]),
        ("2x + y = z", vec![vec![2, 1, -1]]),
        ("3-term progression", vec![vec![-1, 1, 0, -1], vec![0, -1, 1, -1]]),
        ("x + y + z = 0", vec![vec![1, 1, 1]]),
    ];
    for (name, rows) in cases {
        let report = check_columns_condition(&ScalarSystem::new(rows)?)?;
        match report.witness {
            Some(w) => println!("{name:<20} regular, column blocks {:?}", w.blocks),
            None => println!("{name:<20} not regular"),
        }
    }
    Ok(())
}
