//! Canonical VDM++ printer.

use super::types::{render_product_member, render_type};
use crate::model::{Callable, VdmClass, VdmModel, VdmType};

/// Body emitted for operations and functions that carry none.
pub const SKELETON_BODY: &str = "is not yet specified";
/// Expression emitted for values that carry none.
pub const UNDEFINED_VALUE: &str = "undefined";

/// One text unit per class, in model order.
pub fn print_vdm(model: &VdmModel) -> Vec<(String, String)> {
    model
        .classes
        .iter()
        .map(|c| (c.name.clone(), print_class(c)))
        .collect()
}

/// Blocks are emitted as values, types, instance variables, operations,
/// functions; empty blocks are omitted. No trailing newline.
pub fn print_class(class: &VdmClass) -> String {
    let mut lines = Vec::new();
    if class.superclasses.is_empty() {
        lines.push(format!("class {}", class.name));
    } else {
        lines.push(format!(
            "class {} is subclass of {}",
            class.name,
            class.superclasses.join(", ")
        ));
    }

    if !class.values.is_empty() {
        lines.push("values".into());
        for v in &class.values {
            lines.push(format!(
                "{} {} : {} = {};",
                v.access,
                v.name,
                render_type(&v.val_type),
                v.expr_text
            ));
        }
    }
    if !class.type_defs.is_empty() {
        lines.push("types".into());
        for t in &class.type_defs {
            lines.push(format!(
                "{} {} = {};",
                t.access,
                t.name,
                render_type(&t.definition)
            ));
        }
    }
    if !class.instance_variables.is_empty() {
        lines.push("instance variables".into());
        for iv in &class.instance_variables {
            let mut line = format!(
                "{} {}{} : {}",
                iv.access,
                static_prefix(iv.is_static),
                iv.name,
                render_type(&iv.var_type)
            );
            if let Some(init) = &iv.init_text {
                line.push_str(" := ");
                line.push_str(init);
            }
            line.push(';');
            lines.push(line);
        }
    }
    if !class.operations.is_empty() {
        lines.push("operations".into());
        for op in &class.operations {
            lines.extend(callable_lines(op, "==>"));
        }
    }
    if !class.functions.is_empty() {
        lines.push("functions".into());
        for f in &class.functions {
            lines.extend(callable_lines(f, "->"));
        }
    }
    lines.push(format!("end {}", class.name));
    lines.join("\n")
}

fn static_prefix(is_static: bool) -> &'static str {
    if is_static {
        "static "
    } else {
        ""
    }
}

/// Parameter types of a signature domain.
pub(crate) fn render_params(params: &[VdmType]) -> String {
    match params {
        [] => "()".to_string(),
        [VdmType::Product(_)] => format!("({})", render_type(&params[0])),
        [single] => render_type(single),
        many => many
            .iter()
            .map(render_product_member)
            .collect::<Vec<_>>()
            .join(" * "),
    }
}

fn callable_lines(c: &Callable, arrow: &str) -> [String; 2] {
    let signature = format!(
        "{} {}{} : {} {} {}",
        c.access,
        static_prefix(c.is_static),
        c.name,
        render_params(&c.param_types),
        arrow,
        render_type(&c.return_type)
    );
    let (names, body) = match &c.body_text {
        Some(body) if c.param_names.len() == c.param_types.len() => {
            (c.param_names.clone(), body.as_str())
        }
        Some(body) => (placeholders(c.param_types.len()), body.as_str()),
        None => (placeholders(c.param_types.len()), SKELETON_BODY),
    };
    [
        signature,
        format!("{}({}) == {};", c.name, names.join(", "), body),
    ]
}

fn placeholders(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("p{i}")).collect()
}
