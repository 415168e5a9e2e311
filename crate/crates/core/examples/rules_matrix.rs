//! Builds the rules matrix of a spec and prints its pruned form.
//!
//! ```text
//! cargo run --release --example rules_matrix -- "1,2,6;1,2;1,6"
//! ```

use rotsym::boolfn::RSFunctionSpec;
use rotsym::rules::{build_rules_matrix, MatrixBudget, OperationState, StateLayout};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "1,2,3".to_string());
    let spec: RSFunctionSpec = text.parse()?;

    let layout = StateLayout::new(&spec);
    println!("state width Rs - t = {}", layout.width());
    let s = OperationState(1);
    let (r, parity) = layout.right_child(s);
    println!(
        "state {:?} -> left {:?}, right {:?} (odd parity: {parity})",
        layout.decode(s),
        layout.decode(layout.left_child(s)),
        layout.decode(r)
    );

    let rules = build_rules_matrix(&spec, MatrixBudget::default())?;
    println!(
        "raw dimension {}, pruned dimension {}, {} nonzeros",
        rules.raw_dimension(),
        rules.dimension(),
        rules.matrix().nnz()
    );
    if rules.dimension() <= 12 {
        for row in rules.matrix().to_dense_i64().expect("small entries") {
            println!("{row:3?}");
        }
    } else {
        print!("{}", rules.matrix().to_triplet_text());
    }
    Ok(())
}
