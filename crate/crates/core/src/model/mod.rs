//! The two data models and their validation.

mod config;
mod diagnostic;
mod uml;
mod validate;
mod vdm;

pub use config::{Config, Ordering};
pub use diagnostic::{has_errors, Diagnostic, DiagnosticKind, Severity};
pub use uml::{
    AttributeStereotype, Multiplicity, OperationStereotype, Qualifier, UmlAssociation,
    UmlAttribute, UmlClass, UmlGeneralization, UmlModel, UmlOperation,
};
pub use validate::{validate_model, validate_uml};
pub use vdm::{
    is_identifier, Access, BasicType, Callable, FunctionDef, InstanceVariable, OperationDef,
    TypeDef, ValueDef, VdmClass, VdmMember, VdmModel, VdmType,
};
