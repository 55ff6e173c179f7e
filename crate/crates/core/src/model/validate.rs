use std::collections::{BTreeSet, HashMap, HashSet};

use super::diagnostic::{Diagnostic, DiagnosticKind as K};
use super::uml::{AttributeStereotype, UmlModel};
use super::vdm::{is_identifier, VdmModel};
use crate::transform::{classify_instance_variable, MemberPlan};

/// Checks the structural invariants of a VDM model. Empty iff well formed.
pub fn validate_model(model: &VdmModel) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for class in &model.classes {
        if !is_identifier(&class.name) {
            out.push(
                Diagnostic::error(
                    K::InvalidIdentifier,
                    format!("invalid class name '{}'", class.name),
                )
                .in_class(&class.name),
            );
        }
        if !seen.insert(class.name.as_str()) {
            out.push(
                Diagnostic::error(
                    K::DuplicateClass,
                    format!("class '{}' is defined more than once", class.name),
                )
                .in_class(&class.name),
            );
        }
    }

    for class in &model.classes {
        let mut supers = HashSet::new();
        for sup in &class.superclasses {
            if !supers.insert(sup.as_str()) {
                out.push(
                    Diagnostic::error(
                        K::DuplicateSuperclass,
                        format!("class '{}' lists superclass '{}' twice", class.name, sup),
                    )
                    .in_class(&class.name),
                );
            }
            if sup == &class.name {
                out.push(
                    Diagnostic::error(
                        K::SelfInheritance,
                        format!("class '{}' is a subclass of itself", class.name),
                    )
                    .in_class(&class.name),
                );
            } else if model.class(sup).is_none() {
                out.push(
                    Diagnostic::error(
                        K::UnresolvedSuperclass,
                        format!(
                            "superclass '{}' of class '{}' is not defined",
                            sup, class.name
                        ),
                    )
                    .in_class(&class.name),
                );
            }
        }

        let mut names = HashSet::new();
        for member in class.members() {
            let name = member.name();
            if !is_identifier(name) {
                out.push(
                    Diagnostic::error(
                        K::InvalidIdentifier,
                        format!("invalid member name '{}' in class '{}'", name, class.name),
                    )
                    .in_class(&class.name)
                    .on_member(name),
                );
            }
            if !names.insert(name) {
                out.push(
                    Diagnostic::error(
                        K::DuplicateMember,
                        format!(
                            "member '{}' is defined more than once in class '{}'",
                            name, class.name
                        ),
                    )
                    .in_class(&class.name)
                    .on_member(name),
                );
            }
            if member.types().iter().any(|t| !t.is_well_formed()) {
                out.push(
                    Diagnostic::error(
                        K::MalformedType,
                        format!(
                            "member '{}' has a product or union type with fewer than two members",
                            name
                        ),
                    )
                    .in_class(&class.name)
                    .on_member(name),
                );
            }
        }
    }

    let edges: Vec<(&str, &str)> = model
        .classes
        .iter()
        .flat_map(|c| {
            c.superclasses
                .iter()
                .map(move |s| (c.name.as_str(), s.as_str()))
        })
        .collect();
    for name in cyclic_classes(&edges) {
        out.push(
            Diagnostic::error(
                K::InheritanceCycle,
                format!("class '{}' is part of an inheritance cycle", name),
            )
            .in_class(name),
        );
    }
    out
}

/// Checks the structural invariants of a diagram model. Error-severity
/// diagnostics mean the diagram cannot be translated; warnings flag
/// constructs that translate but not back to the same diagram.
pub fn validate_uml(model: &UmlModel) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for class in &model.classes {
        if !is_identifier(&class.name) {
            out.push(
                Diagnostic::error(
                    K::InvalidIdentifier,
                    format!("invalid class name '{}'", class.name),
                )
                .in_class(&class.name),
            );
        }
        if !seen.insert(class.name.as_str()) {
            out.push(
                Diagnostic::error(
                    K::DuplicateClass,
                    format!("class '{}' is declared more than once", class.name),
                )
                .in_class(&class.name),
            );
        }
    }
    let class_names: BTreeSet<String> = model.classes.iter().map(|c| c.name.clone()).collect();

    // Names per class, including roles of outgoing associations, since all
    // of them become members of the same VDM class.
    let mut member_names: HashMap<&str, HashSet<&str>> = HashMap::new();
    for class in &model.classes {
        let names = member_names.entry(class.name.as_str()).or_default();
        let attr_names = class.attributes.iter().map(|a| a.name.as_str());
        let op_names = class.operations.iter().map(|o| o.name.as_str());
        for name in attr_names.chain(op_names) {
            if !is_identifier(name) {
                out.push(
                    Diagnostic::error(
                        K::InvalidIdentifier,
                        format!("invalid member name '{}' in class '{}'", name, class.name),
                    )
                    .in_class(&class.name)
                    .on_member(name),
                );
            }
            if !names.insert(name) {
                out.push(
                    Diagnostic::error(
                        K::DuplicateMember,
                        format!(
                            "member '{}' is declared more than once in class '{}'",
                            name, class.name
                        ),
                    )
                    .in_class(&class.name)
                    .on_member(name),
                );
            }
        }
        for attr in &class.attributes {
            if attr.stereotype == AttributeStereotype::Value && attr.is_static {
                out.push(
                    Diagnostic::error(
                        K::StaticValue,
                        format!("value '{}' cannot be static", attr.name),
                    )
                    .in_class(&class.name)
                    .on_member(&attr.name),
                );
            }
            if attr.stereotype == AttributeStereotype::InstanceVariable && !attr.is_static {
                if let Ok(t) = crate::vdm::parse_vdm_type(&attr.type_text) {
                    if let MemberPlan::Association { .. } =
                        classify_instance_variable(&t, &class_names)
                    {
                        out.push(
                            Diagnostic::warning(
                                K::AssociationShapedAttribute,
                                format!(
                                    "attribute '{}' of class '{}' refers to a class and will be translated as an association",
                                    attr.name, class.name
                                ),
                            )
                            .in_class(&class.name)
                            .on_member(&attr.name),
                        );
                    }
                }
            }
        }
    }

    let mut gen_seen = HashSet::new();
    for g in &model.generalizations {
        if g.child == g.parent {
            out.push(
                Diagnostic::error(
                    K::SelfInheritance,
                    format!("class '{}' inherits from itself", g.child),
                )
                .in_class(&g.child),
            );
        }
        for end in [&g.child, &g.parent] {
            if !class_names.contains(end) {
                out.push(
                    Diagnostic::error(
                        K::UnresolvedEndpoint,
                        format!(
                            "generalization {} <|-- {} names undeclared class '{}'",
                            g.parent, g.child, end
                        ),
                    )
                    .in_class(&g.child),
                );
            }
        }
        if !gen_seen.insert((g.child.as_str(), g.parent.as_str())) {
            out.push(
                Diagnostic::error(
                    K::DuplicateGeneralization,
                    format!(
                        "generalization {} <|-- {} is declared twice",
                        g.parent, g.child
                    ),
                )
                .in_class(&g.child),
            );
        }
    }

    for a in &model.associations {
        if a.role_name.is_empty() {
            out.push(
                Diagnostic::error(
                    K::MissingRole,
                    format!(
                        "association {} --> {} requires a role name",
                        a.source, a.target
                    ),
                )
                .in_class(&a.source),
            );
        } else {
            if !is_identifier(&a.role_name) {
                out.push(
                    Diagnostic::error(
                        K::InvalidIdentifier,
                        format!("invalid role name '{}'", a.role_name),
                    )
                    .in_class(&a.source)
                    .on_member(&a.role_name),
                );
            }
            if let Some(names) = member_names.get_mut(a.source.as_str()) {
                if !names.insert(a.role_name.as_str()) {
                    out.push(
                        Diagnostic::error(
                            K::DuplicateMember,
                            format!(
                                "role '{}' clashes with another member of class '{}'",
                                a.role_name, a.source
                            ),
                        )
                        .in_class(&a.source)
                        .on_member(&a.role_name),
                    );
                }
            }
        }
        for end in [&a.source, &a.target] {
            if !class_names.contains(end) {
                out.push(
                    Diagnostic::error(
                        K::UnresolvedEndpoint,
                        format!(
                            "association {} --> {} names undeclared class '{}'",
                            a.source, a.target, end
                        ),
                    )
                    .in_class(&a.source)
                    .on_member(&a.role_name),
                );
            }
        }
    }

    let edges: Vec<(&str, &str)> = model
        .generalizations
        .iter()
        .map(|g| (g.child.as_str(), g.parent.as_str()))
        .collect();
    for name in cyclic_classes(&edges) {
        out.push(
            Diagnostic::error(
                K::InheritanceCycle,
                format!("class '{}' is part of an inheritance cycle", name),
            )
            .in_class(name),
        );
    }
    out
}

/// Classes that reach themselves through at least two child→parent edges,
/// in first-appearance order. Self-loops are reported separately.
fn cyclic_classes<'a>(edges: &[(&'a str, &'a str)]) -> Vec<&'a str> {
    let mut order = Vec::new();
    for (c, _) in edges {
        if !order.contains(c) {
            order.push(*c);
        }
    }
    order
        .into_iter()
        .filter(|&start| {
            let mut stack: Vec<&str> = edges
                .iter()
                .filter(|(c, p)| *c == start && p != c)
                .map(|(_, p)| *p)
                .collect();
            let mut visited = HashSet::new();
            while let Some(n) = stack.pop() {
                if n == start {
                    return true;
                }
                if visited.insert(n) {
                    stack.extend(
                        edges
                            .iter()
                            .filter(|(c, p)| *c == n && p != c)
                            .map(|(_, p)| *p),
                    );
                }
            }
            false
        })
        .collect()
}
