//! Local and global clustering coefficients of tensor (Kronecker) products
//! of graphs.
//!
//! Two routes are provided for every product statistic. The implicit route
//! evaluates closed forms on the factors (triangle counts, degrees, σ,
//! average degree, strongly regular parameters) and never builds the
//! product. The explicit route materializes `G × H` with
//! [`product::tensor_product`] and counts triangles directly. The
//! [`verify`] module runs both and compares them.
//!
//! ```
//! use tensorcc::{closed_forms, generators, product, triangles};
//!
//! let k4 = generators::complete(4).unwrap();
//! let implicit = closed_forms::product_global_cc(&k4, &k4).unwrap();
//! let explicit = triangles::global_cc(&product::tensor_product(&k4, &k4).unwrap()).unwrap();
//! assert!((implicit - 0.5).abs() < 1e-12 && (explicit - 0.5).abs() < 1e-12);
//! ```

pub mod bench;
pub mod closed_forms;
pub mod error;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod io;
pub mod product;
pub mod report;
pub mod triangles;
pub mod verify;

pub use closed_forms::{Mode, ProductCcReport, SrgParams};
pub use error::{Error, Result};
pub use exact::Exact;
pub use graph::Graph;
pub use io::GraphSource;
pub use product::{Budget, PairEncoding, PairIndex};
pub use triangles::CcReport;
pub use verify::{Status, VerifyOutcome};
