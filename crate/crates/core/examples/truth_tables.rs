//! Monomial truth tables, rotation orbits and Hamming weights.
//!
//! ```text
//! cargo run --release --example truth_tables
//! ```

use rotsym::boolfn::{
    mrs_truth_table, monomial_runs, monomial_truth_table, rotation_orbit, weight, Budget,
    Interpretation, MonomialPattern, RSFunctionSpec,
};

fn main() -> rotsym::Result<()> {
    // x_1 x_2 x_3 over four variables, built from its run-length form.
    let m: MonomialPattern = "1,2,3".parse()?;
    let runs = monomial_runs(&m, 4)?;
    println!("runs of ({m})_4: {runs:?}");
    println!("table:          {}", monomial_truth_table(&m, 4)?.to_bit_string());

    // x_1 x_6 is short at n = 10: only five distinct rotations.
    let q: MonomialPattern = "1,6".parse()?;
    let orbit = rotation_orbit(&q, 10)?;
    println!(
        "orbit of ({q})_10 has {} members, short = {}, multiplicity {}",
        orbit.len(),
        orbit.is_short(),
        orbit.multiplicity()
    );

    // The two readings of a short sum differ in weight.
    let spec: RSFunctionSpec = "1,2,6;1,2;1,6".parse()?;
    let budget = Budget::default();
    for n in 7..=13 {
        let od = weight(&spec, n, Interpretation::OrbitDistinct, budget)?;
        let fs = weight(&spec, n, Interpretation::FullSum, budget)?;
        let mark = if od != fs { "  <- short" } else { "" };
        println!("n = {n:2}: orbit-distinct {od:5}  full-sum {fs:5}{mark}");
    }

    // The bitsliced counter agrees with a materialised table.
    let t = mrs_truth_table(&spec, 12, Interpretation::OrbitDistinct)?;
    println!("table weight at n = 12: {}", t.weight());
    Ok(())
}
