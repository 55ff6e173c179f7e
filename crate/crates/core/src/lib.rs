//! Translation between a VDM++ subset and PlantUML class diagrams.

pub mod cli;
pub mod error;
pub mod model;
pub mod puml;
pub mod transform;
pub mod vdm;

pub use error::{ParseError, SourceSpan};
pub use model::{Config, Ordering, UmlModel, VdmModel};
pub use puml::{parse_puml, print_puml};
pub use transform::{uml_to_vdm, vdm_to_uml};
pub use vdm::{parse_vdm, print_vdm};
