//! The whole pipeline through the library's run configuration, rendered
//! as text and JSON.
//!
//! ```text
//! cargo run --release --example pipeline -- "1,2,6;1,2;1,6" 12
//! ```

use rotsym::cli::{parse_spec, render, run_pipeline, OutputFormat, RunConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let spec = parse_spec(&args.next().unwrap_or_else(|| "1,2,6;1,2;1,6".to_string()))?;
    let count = args.next().map(|s| s.parse()).transpose()?.unwrap_or(12);

    let mut config = RunConfig::new(spec);
    config.weights_count = Some(count);
    config.verify = Some(20);
    let result = run_pipeline(&config)?;
    print!("{}", render(&result, OutputFormat::Text));

    let json = render(&result, OutputFormat::Json);
    println!("JSON document: {} bytes, {} weights", json.len(), result.weights.len());
    Ok(())
}
