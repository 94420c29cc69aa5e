//! Java source handling: tokenizer, concrete syntax tree, and helpers shared
//! by the patcher and the metrics.

pub mod lexer;
pub mod tree;

pub use tree::{parse_source, FailureStage, SourceTree, SyntaxFailure};
