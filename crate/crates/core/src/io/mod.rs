//! Document formats and renderers.
//!
//! All documents are JSON with an explicit `schema_version`. Writers emit a
//! fixed layout (one record per line) so files are stable under version
//! control and byte-identical across runs.

mod documents;
mod render;
mod shape_doc;

use thiserror::Error;

use crate::model::Diagnostic;

pub use documents::{
    parse_assembly, parse_tileset, parse_trace, write_assembly, write_graph, write_tileset, write_trace, write_witness,
};
pub use render::{render, render_ascii, render_svg, AsciiStyle, RenderFormat};
pub use shape_doc::{parse_shape_points, write_shape_grid, write_shape_points};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoadError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("schema error at line {line}, column {column}: {message}")]
    Schema { line: usize, column: usize, message: String },
    #[error("unsupported schema_version {found} (this build reads {SCHEMA_VERSION})")]
    SchemaVersion { found: u32 },
    #[error("{field}: {message}")]
    Field { field: String, message: String },
    #[error("{}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n"))]
    Invalid(Vec<Diagnostic>),
}

impl LoadError {
    pub fn diagnostics(&self) -> &[Diagnostic] {
        match self {
            LoadError::Invalid(d) => d,
            _ => &[],
        }
    }

    pub(crate) fn field(field: impl Into<String>, message: impl Into<String>) -> Self {
        LoadError::Field { field: field.into(), message: message.into() }
    }
}

impl From<serde_json::Error> for LoadError {
    fn from(e: serde_json::Error) -> Self {
        use serde_json::error::Category;
        let (line, column) = (e.line(), e.column());
        let message = e.to_string();
        // serde_json appends " at line L column C"; keep only the message
        let message = match message.rfind(" at line ") {
            Some(i) => message[..i].to_owned(),
            None => message,
        };
        match e.classify() {
            Category::Data => LoadError::Schema { line, column, message },
            Category::Io | Category::Syntax | Category::Eof => LoadError::Syntax { line, column, message },
        }
    }
}

fn check_version(found: u32) -> Result<(), LoadError> {
    if found == SCHEMA_VERSION {
        Ok(())
    } else {
        Err(LoadError::SchemaVersion { found })
    }
}
