//! Seeded random models for the round-trip suites.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use vdmuml::model::*;
use vdmuml::transform::{classify_instance_variable, is_abstracted, MemberPlan};
use vdmuml::vdm::render_type;

const TYPE_NAMES: [&str; 3] = ["Id", "Key", "Amount"];

fn access(rng: &mut impl Rng) -> Access {
    *[Access::Private, Access::Protected, Access::Public]
        .choose(rng)
        .unwrap()
}

fn leaf(rng: &mut impl Rng, classes: &[String]) -> VdmType {
    match rng.gen_range(0..3) {
        0 => VdmType::Basic(*BasicType::ALL.choose(rng).unwrap()),
        1 if !classes.is_empty() => VdmType::named(classes.choose(rng).unwrap().as_str()),
        _ => VdmType::named(*TYPE_NAMES.choose(rng).unwrap()),
    }
}

/// A well-formed type tree of at most `depth` constructor levels.
pub fn vdm_type(rng: &mut impl Rng, classes: &[String], depth: u32) -> VdmType {
    if depth == 0 || rng.gen_bool(0.35) {
        return leaf(rng, classes);
    }
    let sub = |rng: &mut _| vdm_type(rng, classes, depth - 1);
    match rng.gen_range(0..8) {
        0 => VdmType::set(sub(rng)),
        1 => VdmType::set1(sub(rng)),
        2 => VdmType::seq(sub(rng)),
        3 => VdmType::seq1(sub(rng)),
        4 => VdmType::optional(sub(rng)),
        5 => {
            let d = sub(rng);
            let r = sub(rng);
            VdmType::map(d, r, rng.gen_bool(0.5))
        }
        6 => VdmType::Product((0..rng.gen_range(2..=4)).map(|_| sub(rng)).collect()),
        _ => VdmType::Union((0..rng.gen_range(2..=4)).map(|_| sub(rng)).collect()),
    }
}

/// A reference shaped type that classifies as an association.
fn reference_type(rng: &mut impl Rng, classes: &[String]) -> VdmType {
    let target = VdmType::named(classes.choose(rng).unwrap().as_str());
    let end = match rng.gen_range(0..6) {
        0 => target,
        1 => VdmType::optional(target),
        2 => VdmType::set(target),
        3 => VdmType::set1(target),
        4 => VdmType::seq(target),
        _ => VdmType::seq1(target),
    };
    if rng.gen_bool(0.3) {
        VdmType::map(vdm_type(rng, classes, 1), end, rng.gen_bool(0.5))
    } else {
        end
    }
}

fn is_reference(t: &VdmType, classes: &[String]) -> bool {
    let set: BTreeSet<String> = classes.iter().cloned().collect();
    classify_instance_variable(t, &set) != MemberPlan::Attribute
}

fn class_names(rng: &mut impl Rng, max: usize) -> Vec<String> {
    let n = rng.gen_range(1..=max);
    (0..n).map(|i| format!("C{i}")).collect()
}

/// Acyclic: parents always come earlier in the class list.
fn superclasses(rng: &mut impl Rng, classes: &[String], i: usize) -> Vec<String> {
    let mut earlier: Vec<String> = classes[..i].to_vec();
    earlier.shuffle(rng);
    earlier.truncate(rng.gen_range(0..=2));
    earlier
}

/// A model whose every member crosses into UML and back without loss:
/// instance variables are either association shaped or render without
/// abstraction at `config`.
pub fn uml_complete_vdm(rng: &mut impl Rng, config: &Config) -> VdmModel {
    let names = class_names(rng, 8);
    let mut model = VdmModel::default();
    for (i, name) in names.iter().enumerate() {
        let mut c = VdmClass::new(name);
        c.superclasses = superclasses(rng, &names, i);
        for j in 0..rng.gen_range(0..=10) {
            let member = format!("m{i}x{j}");
            match rng.gen_range(0..6) {
                0 => c.values.push(ValueDef {
                    access: access(rng),
                    name: member,
                    val_type: vdm_type(rng, &names, 2),
                    expr_text: "undefined".into(),
                }),
                1 => c.type_defs.push(TypeDef {
                    access: access(rng),
                    name: member,
                    definition: vdm_type(rng, &names, 2),
                }),
                2 | 3 => {
                    // static references stay attributes, so they too must fit
                    let is_static = rng.gen_bool(0.2);
                    let var_type = loop {
                        let t = if rng.gen_bool(0.5) {
                            reference_type(rng, &names)
                        } else {
                            vdm_type(rng, &names, 3)
                        };
                        if !is_abstracted(&t, config) || (!is_static && is_reference(&t, &names)) {
                            break t;
                        }
                    };
                    c.instance_variables.push(InstanceVariable {
                        access: access(rng),
                        is_static,
                        name: member,
                        var_type,
                        init_text: None,
                    });
                }
                k => {
                    let is_op = k == 4;
                    let callable = Callable {
                        access: access(rng),
                        is_static: rng.gen_bool(0.2),
                        name: member,
                        param_types: (0..rng.gen_range(0..=3))
                            .map(|_| vdm_type(rng, &names, 2))
                            .collect(),
                        return_type: if is_op && rng.gen_bool(0.3) {
                            VdmType::Unit
                        } else {
                            vdm_type(rng, &names, 2)
                        },
                        param_names: Vec::new(),
                        body_text: None,
                    };
                    if is_op {
                        c.operations.push(callable);
                    } else {
                        c.functions.push(callable);
                    }
                }
            }
        }
        model.classes.push(c);
    }
    model
}

/// A valid, warning-free diagram in the member order the forward
/// translation produces.
pub fn valid_uml(rng: &mut impl Rng) -> UmlModel {
    let names = class_names(rng, 8);
    let name_set: BTreeSet<String> = names.iter().cloned().collect();
    let mut model = UmlModel::default();
    for (i, name) in names.iter().enumerate() {
        let mut c = UmlClass::new(name);
        let n = rng.gen_range(0..=10);
        let mut kinds: Vec<u32> = (0..n).map(|_| rng.gen_range(0..6)).collect();
        kinds.sort_by_key(|k| match k {
            0 => 0,
            1 => 1,
            2 => 2,
            3 => 4,
            4 => 5,
            _ => 3,
        });
        for (j, k) in kinds.into_iter().enumerate() {
            let member = format!("m{i}x{j}");
            match k {
                0 | 1 => c.attributes.push(UmlAttribute {
                    visibility: access(rng),
                    is_static: false,
                    name: member,
                    type_text: render_type(&vdm_type(rng, &names, 2)),
                    stereotype: if k == 0 {
                        AttributeStereotype::Value
                    } else {
                        AttributeStereotype::Type
                    },
                }),
                2 => {
                    let is_static = rng.gen_bool(0.2);
                    let t = loop {
                        let t = vdm_type(rng, &names, 3);
                        if is_static
                            || classify_instance_variable(&t, &name_set) == MemberPlan::Attribute
                        {
                            break t;
                        }
                    };
                    c.attributes.push(UmlAttribute {
                        visibility: access(rng),
                        is_static,
                        name: member,
                        type_text: render_type(&t),
                        stereotype: AttributeStereotype::InstanceVariable,
                    });
                }
                3 | 4 => c.operations.push(UmlOperation {
                    visibility: access(rng),
                    is_static: rng.gen_bool(0.2),
                    name: member,
                    param_type_texts: (0..rng.gen_range(0..=3))
                        .map(|_| render_type(&vdm_type(rng, &names, 2)))
                        .collect(),
                    return_type_text: if k == 3 && rng.gen_bool(0.3) {
                        "()".into()
                    } else {
                        render_type(&vdm_type(rng, &names, 2))
                    },
                    stereotype: if k == 3 {
                        OperationStereotype::Operation
                    } else {
                        OperationStereotype::Function
                    },
                }),
                _ => model.associations.push(UmlAssociation {
                    source: name.clone(),
                    target: names.choose(rng).unwrap().clone(),
                    role_name: member,
                    role_visibility: access(rng),
                    multiplicity: *Multiplicity::ALL.choose(rng).unwrap(),
                    qualifier: rng.gen_bool(0.3).then(|| Qualifier {
                        type_text: render_type(&vdm_type(rng, &names, 1)),
                        unique: rng.gen_bool(0.5),
                    }),
                }),
            }
        }
        model.classes.push(c);
        for parent in superclasses(rng, &names, i) {
            model.generalizations.push(UmlGeneralization {
                child: name.clone(),
                parent,
            });
        }
    }
    model
}
