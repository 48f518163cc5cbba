//! Text and JSON forms of Pimenov-algebra elements.

mod json;
mod parse;
mod print;

pub use json::{from_json, from_json_value, to_json, to_json_value, JsonError};
pub use parse::{parse, ParseError, ParseErrorKind};
pub use print::{print, print_with, Style};
