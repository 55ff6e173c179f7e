//! Translation between the VDM and UML models.

mod abstraction;
mod backward;
mod classify;
mod forward;

pub use abstraction::{
    abstract_type, capacity, complexity, group, is_abstracted, AbstractionGroup,
};
pub use backward::{uml_to_vdm, TranslationError, TranslationErrorKind};
pub use classify::{classify_instance_variable, multiplicity_to_type, MemberPlan};
pub use forward::{translate_vdm, vdm_to_uml, VdmToUml};
