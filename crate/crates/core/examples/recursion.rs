//! From a reduced polynomial to a weight recursion, checked against
//! enumerated weights.
//!
//! ```text
//! cargo run --release --example recursion
//! ```

use rotsym::boolfn::{Budget, Interpretation, RSFunctionSpec};
use rotsym::linalg::{minimal_polynomial, MinPolyMethod};
use rotsym::recursion::{initial_conditions, propagate, verify_recursion, RecursionSpec};
use rotsym::rules::{build_rules_matrix, MatrixBudget};

fn main() -> rotsym::Result<()> {
    let budget = Budget::default();
    for text in ["1,2,3", "1,2;1,3", "1,4;1,2,3"] {
        let spec: RSFunctionSpec = text.parse()?;
        let rules = build_rules_matrix(&spec, MatrixBudget::default())?;
        let p = minimal_polynomial(rules.matrix(), MinPolyMethod::Auto, 1)?;
        let (q, _) = p.strip_x_factor()?;
        let rec = RecursionSpec::from_polynomial(&q, spec.max_top() + 1)?;
        println!("{spec}: q = {q}");

        let init = initial_conditions(&spec, &rec, Interpretation::FullSum, budget)?;
        let seq = propagate(&rec, &init, rec.order() + 6)?;
        let shown: Vec<String> = seq.values.iter().map(|v| v.to_string()).collect();
        println!("  w_{}.. = {}", seq.start_n, shown.join(", "));

        for interp in [Interpretation::FullSum, Interpretation::OrbitDistinct] {
            let report = verify_recursion(&spec, &rec, spec.max_top(), 20, interp, budget)?;
            println!(
                "  {interp:>14}: nonzero residuals at {:?}, holds from {:?}, short n {:?}",
                report.nonzero, report.holds_from, report.short_n
            );
        }
    }
    Ok(())
}
