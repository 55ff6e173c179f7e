//! Canonical PlantUML-for-VDM printer.

use crate::model::{
    Access, Config, Ordering, UmlAssociation, UmlAttribute, UmlModel, UmlOperation,
};

/// Prints a diagram wrapped in `@startuml`/`@enduml`, without a trailing
/// newline. Classes come first, then generalizations, then associations.
pub fn print_puml(model: &UmlModel, config: &Config) -> String {
    let mut classes: Vec<_> = model.classes.iter().collect();
    let mut generalizations: Vec<_> = model.generalizations.iter().collect();
    let mut associations: Vec<_> = model.associations.iter().collect();
    if config.ordering == Ordering::Alphabetical {
        classes.sort_by(|a, b| a.name.cmp(&b.name));
        generalizations.sort_by(|a, b| a.child.cmp(&b.child));
        associations.sort_by(|a, b| a.source.cmp(&b.source));
    }

    let mut lines = vec!["@startuml".to_string()];
    for class in classes {
        lines.push(format!("class {} {{", class.name));
        let mut attributes: Vec<_> = class.attributes.iter().collect();
        attributes.sort_by_key(|a| a.stereotype);
        let mut operations: Vec<_> = class.operations.iter().collect();
        operations.sort_by_key(|o| o.stereotype);
        lines.extend(
            attributes
                .into_iter()
                .map(|a| format!("  {}", attribute_line(a))),
        );
        lines.extend(
            operations
                .into_iter()
                .map(|o| format!("  {}", operation_line(o))),
        );
        lines.push("}".into());
    }
    if !generalizations.is_empty() {
        lines.push(String::new());
        lines.extend(
            generalizations
                .iter()
                .map(|g| format!("{} <|-- {}", g.parent, g.child)),
        );
    }
    if !associations.is_empty() {
        lines.push(String::new());
        lines.extend(associations.iter().map(|a| association_line(a)));
    }
    lines.push("@enduml".into());
    lines.join("\n")
}

fn modifiers(visibility: Access, is_static: bool) -> String {
    if is_static {
        format!("{} {{static}} ", visibility.sigil())
    } else {
        format!("{} ", visibility.sigil())
    }
}

pub(crate) fn attribute_line(a: &UmlAttribute) -> String {
    let mut line = modifiers(a.visibility, a.is_static);
    line.push_str(&a.name);
    if !a.type_text.is_empty() {
        line.push_str(" : ");
        line.push_str(&a.type_text);
    }
    if let Some(marker) = a.stereotype.marker() {
        line.push_str(&format!(" <<{marker}>>"));
    }
    line
}

pub(crate) fn operation_line(o: &UmlOperation) -> String {
    let mut line = modifiers(o.visibility, o.is_static);
    line.push_str(&format!("{}({})", o.name, o.param_type_texts.join(", ")));
    if o.return_type_text != "()" {
        line.push_str(" : ");
        line.push_str(&o.return_type_text);
    }
    if let Some(marker) = o.stereotype.marker() {
        line.push_str(&format!(" <<{marker}>>"));
    }
    line
}

pub(crate) fn association_line(a: &UmlAssociation) -> String {
    let mut line = a.source.clone();
    if let Some(q) = &a.qualifier {
        if q.unique {
            line.push_str(&format!(" [({})]", q.type_text));
        } else {
            line.push_str(&format!(" [{}]", q.type_text));
        }
    }
    line.push_str(" -->");
    if let Some(label) = a.multiplicity.label() {
        line.push_str(&format!(" \"{label}\""));
    }
    let role_sigil = match a.role_visibility {
        Access::Private => String::new(),
        other => other.sigil().to_string(),
    };
    line.push_str(&format!(" {} : {}{}", a.target, role_sigil, a.role_name));
    line
}
