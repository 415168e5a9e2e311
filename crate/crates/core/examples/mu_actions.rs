//! mu-actions, break levels and how actions split between table halves.
//!
//! ```text
//! cargo run --release --example mu_actions
//! ```

use rotsym::actions::{
    break_levels, mu_sequence_closed_form, mu_sequence_definitional, split_action,
    split_identity_check,
};
use rotsym::boolfn::{MonomialPattern, TruthTable};

fn main() -> rotsym::Result<()> {
    let g: MonomialPattern = "1,2,6".parse()?;
    println!("break levels of ({g}): {:?}", break_levels(&g));

    for v in 1..=g.top() {
        let closed = mu_sequence_closed_form(&g, v, 6)?;
        let direct = mu_sequence_definitional(&g, v, 6)?;
        assert_eq!(closed, direct);
        let split = split_action(&g, v)?;
        println!(
            "v = {v}: mask {}  splits to {:?} | {:?}",
            closed.to_bit_string(),
            split.left,
            split.right
        );
    }

    // Applying an action to a whole table equals applying the split
    // actions to its halves.
    let table = TruthTable::from_fn(7, |j| j.count_ones() % 3 == 1);
    for v in 1..=g.top() {
        assert!(split_identity_check(&g, v, 8, &table)?);
    }
    println!("split identity holds for every level over 8 variables");
    Ok(())
}
