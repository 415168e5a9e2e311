//! Hamming-weight recursions for rotation symmetric Boolean functions.
//!
//! A function is given by generating monomials such as `x_1 x_2 x_6`,
//! `x_1 x_2` and `x_1 x_6`; its `n`-variable member XORs every rotation
//! of each generator. The weights `w_n` of that family satisfy a linear
//! recursion whose polynomial is the minimal polynomial of a small integer
//! "rules matrix" describing how generator actions split when a truth
//! table is halved. This crate builds that matrix, computes the minimal
//! polynomial exactly, and checks the resulting recursion against weights
//! counted by enumeration.
//!
//! ```
//! use rotsym::cli::{parse_spec, run_pipeline, RunConfig};
//!
//! let mut config = RunConfig::new(parse_spec("1,2,6;1,2;1,6")?);
//! config.weights_count = Some(6);
//! let result = run_pipeline(&config)?;
//! assert_eq!(result.reduced_polynomial.to_string(), "-8+4 x+4 x^2+2 x^3-2 x^4-2 x^5+x^6");
//! assert_eq!(result.weights[3].value, 496.into());
//! # Ok::<(), rotsym::Error>(())
//! ```
//!
//! ## Modules
//!
//! - [`boolfn`]: specs, closed-form truth tables, orbits, bitsliced weights
//! - [`actions`]: generator actions and how they split
//! - [`rules`]: operation states and the rules matrix
//! - [`linalg`]: exact polynomials, sparse matrices, minimal polynomials
//! - [`recursion`]: recurrences, initial conditions, verification
//! - [`cli`]: the pipeline behind the `rotsym` binary
//!
//! ## Examples
//!
//! ```bash
//! cargo run --release --example truth_tables
//! cargo run --release --example mu_actions
//! cargo run --release --example rules_matrix -- "1,2,6;1,2;1,6"
//! cargo run --release --example minimal_polynomial -- 1,3,11
//! cargo run --release --example recursion
//! cargo run --release --example pipeline -- "1,2,6;1,2;1,6" 12
//! ```

pub mod actions;
pub mod boolfn;
pub mod cli;
mod decimal;
pub mod error;
pub mod linalg;
pub mod recursion;
pub mod rules;

pub use error::{Error, Result};
