use std::collections::BTreeSet;

use crate::model::{Multiplicity, Qualifier, VdmType};
use crate::vdm::render_type;

/// How an instance variable is drawn.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MemberPlan {
    Association {
        target: String,
        multiplicity: Multiplicity,
        qualifier: Option<Qualifier>,
    },
    /// Drawn as a class attribute.
    Attribute,
}

/// Decides whether an instance variable type is an object reference shape
/// that becomes an association. Only the type tree and the set of class
/// names matter.
pub fn classify_instance_variable(
    var_type: &VdmType,
    class_names: &BTreeSet<String>,
) -> MemberPlan {
    if let Some((target, multiplicity)) = reference_shape(var_type, class_names) {
        return MemberPlan::Association {
            target,
            multiplicity,
            qualifier: None,
        };
    }
    if let VdmType::Map {
        domain,
        range,
        injective,
    } = var_type
    {
        if let (false, Some((target, multiplicity))) = (
            **domain == VdmType::Unit,
            reference_shape(range, class_names),
        ) {
            return MemberPlan::Association {
                target,
                multiplicity,
                qualifier: Some(Qualifier {
                    type_text: render_type(domain),
                    unique: *injective,
                }),
            };
        }
    }
    MemberPlan::Attribute
}

fn reference_shape(t: &VdmType, class_names: &BTreeSet<String>) -> Option<(String, Multiplicity)> {
    let class_ref = |t: &VdmType| match t {
        VdmType::Named(n) if class_names.contains(n) => Some(n.clone()),
        _ => None,
    };
    match t {
        VdmType::Named(_) => class_ref(t).map(|n| (n, Multiplicity::One)),
        VdmType::Optional(inner) => class_ref(inner).map(|n| (n, Multiplicity::Opt)),
        VdmType::Set(inner) => class_ref(inner).map(|n| (n, Multiplicity::Set0)),
        VdmType::Set1(inner) => class_ref(inner).map(|n| (n, Multiplicity::Set1)),
        VdmType::Seq(inner) => class_ref(inner).map(|n| (n, Multiplicity::Seq0)),
        VdmType::Seq1(inner) => class_ref(inner).map(|n| (n, Multiplicity::Seq1)),
        _ => None,
    }
}

/// The instance variable type an association end stands for.
pub fn multiplicity_to_type(m: Multiplicity, target: &str) -> VdmType {
    let r = VdmType::named(target);
    match m {
        Multiplicity::One => r,
        Multiplicity::Opt => VdmType::optional(r),
        Multiplicity::Set0 => VdmType::set(r),
        Multiplicity::Set1 => VdmType::set1(r),
        Multiplicity::Seq0 => VdmType::seq(r),
        Multiplicity::Seq1 => VdmType::seq1(r),
    }
}
