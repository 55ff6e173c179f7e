use std::collections::BTreeSet;

use super::abstraction::{abstract_type, is_abstracted};
use super::classify::{classify_instance_variable, MemberPlan};
use crate::model::{
    AttributeStereotype, Callable, Config, OperationStereotype, UmlAssociation, UmlAttribute,
    UmlClass, UmlGeneralization, UmlModel, UmlOperation, VdmModel,
};
use crate::vdm::render_type;

/// Result of a VDM to UML translation with the members whose types were
/// elided.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VdmToUml {
    pub model: UmlModel,
    /// `(class, member)` pairs.
    pub abstracted: Vec<(String, String)>,
}

pub fn vdm_to_uml(model: &VdmModel, config: &Config) -> UmlModel {
    translate_vdm(model, config).model
}

/// Expects a model without validation errors.
pub fn translate_vdm(model: &VdmModel, config: &Config) -> VdmToUml {
    let class_names: BTreeSet<String> = model.classes.iter().map(|c| c.name.clone()).collect();
    let mut out = UmlModel::default();
    let mut abstracted = Vec::new();

    for class in &model.classes {
        let mut uc = UmlClass::new(&class.name);
        for v in &class.values {
            uc.attributes.push(UmlAttribute {
                visibility: v.access,
                is_static: false,
                name: v.name.clone(),
                type_text: render_type(&v.val_type),
                stereotype: AttributeStereotype::Value,
            });
        }
        for t in &class.type_defs {
            uc.attributes.push(UmlAttribute {
                visibility: t.access,
                is_static: false,
                name: t.name.clone(),
                type_text: render_type(&t.definition),
                stereotype: AttributeStereotype::Type,
            });
        }
        for iv in &class.instance_variables {
            // An association end has no static marker, so static
            // references stay attributes.
            let plan = if iv.is_static {
                MemberPlan::Attribute
            } else {
                classify_instance_variable(&iv.var_type, &class_names)
            };
            match plan {
                MemberPlan::Association {
                    target,
                    multiplicity,
                    qualifier,
                } => out.associations.push(UmlAssociation {
                    source: class.name.clone(),
                    target,
                    role_name: iv.name.clone(),
                    role_visibility: iv.access,
                    multiplicity,
                    qualifier,
                }),
                MemberPlan::Attribute => {
                    if is_abstracted(&iv.var_type, config) {
                        abstracted.push((class.name.clone(), iv.name.clone()));
                    }
                    uc.attributes.push(UmlAttribute {
                        visibility: iv.access,
                        is_static: iv.is_static,
                        name: iv.name.clone(),
                        type_text: abstract_type(&iv.var_type, config),
                        stereotype: AttributeStereotype::InstanceVariable,
                    });
                }
            }
        }
        uc.operations.extend(
            class
                .operations
                .iter()
                .map(|op| operation(op, OperationStereotype::Operation)),
        );
        uc.operations.extend(
            class
                .functions
                .iter()
                .map(|f| operation(f, OperationStereotype::Function)),
        );
        out.classes.push(uc);

        out.generalizations
            .extend(class.superclasses.iter().map(|parent| UmlGeneralization {
                child: class.name.clone(),
                parent: parent.clone(),
            }));
    }
    VdmToUml {
        model: out,
        abstracted,
    }
}

fn operation(c: &Callable, stereotype: OperationStereotype) -> UmlOperation {
    UmlOperation {
        visibility: c.access,
        is_static: c.is_static,
        name: c.name.clone(),
        param_type_texts: c.param_types.iter().map(render_type).collect(),
        return_type_text: render_type(&c.return_type),
        stereotype,
    }
}
