//! PlantUML-for-VDM front end.

mod parser;
mod printer;

pub use parser::{parse_multiplicity, parse_puml, parse_puml_located, PumlIndex};
pub use printer::print_puml;
