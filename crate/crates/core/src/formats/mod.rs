//! Problem files, model serializations and diagram output.

pub mod hasse;
pub mod model_io;
pub mod problem;

pub use hasse::{hasse_dot, HasseDiagram};
pub use model_io::{
    parse_model, parse_model_structured, parse_model_text, rebind, serialize_model, Style,
};
pub use problem::{parse_problem, serialize_problem, Problem};
