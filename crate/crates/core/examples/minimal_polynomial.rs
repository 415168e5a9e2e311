//! Exact minimal polynomials with each available method.
//!
//! ```text
//! cargo run --release --example minimal_polynomial -- 1,3,11
//! ```

use std::time::Instant;

use rotsym::boolfn::RSFunctionSpec;
use rotsym::linalg::{annihilates, minimal_polynomial, MinPolyMethod, SparseIntMatrix};
use rotsym::rules::{build_rules_matrix, MatrixBudget};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // A Jordan block with eigenvalue 2 next to a 1x1 block.
    let a = SparseIntMatrix::from_dense(&[vec![2, 1, 0], vec![0, 2, 0], vec![0, 0, 2]])?;
    println!("jordan example: {}", minimal_polynomial(&a, MinPolyMethod::Auto, 1)?);

    let text = std::env::args().nth(1).unwrap_or_else(|| "1,2,6;1,2;1,6".to_string());
    let spec: RSFunctionSpec = text.parse()?;
    let rules = build_rules_matrix(&spec, MatrixBudget::default())?;
    let m = rules.matrix();
    println!("spec {spec}: pruned dimension {}", m.dim());

    let mut methods = vec![MinPolyMethod::Modular, MinPolyMethod::VectorLcm];
    if m.dim() <= 64 {
        methods.push(MinPolyMethod::DenseDependence);
    }
    for method in methods {
        let t = Instant::now();
        let p = minimal_polynomial(m, method, 7)?;
        let (q, k) = p.strip_x_factor()?;
        println!(
            "{method:>10}: degree {}, x^{k} factor, reduced degree {} ({:.2?})",
            p.degree().unwrap_or(0),
            q.degree().unwrap_or(0),
            t.elapsed()
        );
        assert!(annihilates(&p, m));
        if q.degree().unwrap_or(0) <= 12 {
            println!("            reduced: {q}");
        }
    }
    Ok(())
}
