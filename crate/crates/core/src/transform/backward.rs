use super::classify::multiplicity_to_type;
use crate::model::{
    AttributeStereotype, Callable, InstanceVariable, OperationStereotype, TypeDef, UmlModel,
    UmlOperation, ValueDef, VdmClass, VdmModel, VdmType,
};
use crate::vdm::{parse_vdm_type, tokenize, TokenKind, UNDEFINED_VALUE};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TranslationErrorKind {
    /// The type text was elided on the way to UML.
    AbstractedType,
    InvalidType,
    MissingType,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("class '{class}', member '{member}': {message}")]
pub struct TranslationError {
    pub class: String,
    pub member: String,
    pub kind: TranslationErrorKind,
    pub message: String,
}

/// Translates a diagram into a skeleton VDM model: operations and functions
/// get no bodies, values get `undefined`.
///
/// Expects a model without validation errors.
pub fn uml_to_vdm(model: &UmlModel) -> Result<VdmModel, Vec<TranslationError>> {
    let mut errors = Vec::new();
    let mut classes = Vec::new();

    for uc in &model.classes {
        let mut class = VdmClass::new(&uc.name);
        class.superclasses = model
            .generalizations
            .iter()
            .filter(|g| g.child == uc.name)
            .map(|g| g.parent.clone())
            .collect();

        let mut parse = |member: &str, text: &str| {
            parse_type_text(text).map_err(|(kind, message)| {
                errors.push(TranslationError {
                    class: uc.name.clone(),
                    member: member.to_string(),
                    kind,
                    message,
                })
            })
        };

        for a in &uc.attributes {
            let Ok(t) = parse(&a.name, &a.type_text) else {
                continue;
            };
            match a.stereotype {
                AttributeStereotype::Value => class.values.push(ValueDef {
                    access: a.visibility,
                    name: a.name.clone(),
                    val_type: t,
                    expr_text: UNDEFINED_VALUE.to_string(),
                }),
                AttributeStereotype::Type => class.type_defs.push(TypeDef {
                    access: a.visibility,
                    name: a.name.clone(),
                    definition: t,
                }),
                AttributeStereotype::InstanceVariable => {
                    class.instance_variables.push(InstanceVariable {
                        access: a.visibility,
                        is_static: a.is_static,
                        name: a.name.clone(),
                        var_type: t,
                        init_text: None,
                    })
                }
            }
        }

        for op in &uc.operations {
            let Ok(callable) = callable(op, &mut parse) else {
                continue;
            };
            match op.stereotype {
                OperationStereotype::Operation => class.operations.push(callable),
                OperationStereotype::Function => class.functions.push(callable),
            }
        }

        for a in model.associations.iter().filter(|a| a.source == uc.name) {
            let end = multiplicity_to_type(a.multiplicity, &a.target);
            let var_type = match &a.qualifier {
                None => end,
                Some(q) => {
                    let Ok(domain) = parse(&a.role_name, &q.type_text) else {
                        continue;
                    };
                    VdmType::map(domain, end, q.unique)
                }
            };
            class.instance_variables.push(InstanceVariable {
                access: a.role_visibility,
                is_static: false,
                name: a.role_name.clone(),
                var_type,
                init_text: None,
            });
        }
        classes.push(class);
    }

    if errors.is_empty() {
        Ok(VdmModel { classes })
    } else {
        Err(errors)
    }
}

fn callable<F>(op: &UmlOperation, parse: &mut F) -> Result<Callable, ()>
where
    F: FnMut(&str, &str) -> Result<VdmType, ()>,
{
    let mut param_types = Vec::new();
    let mut failed = false;
    for p in &op.param_type_texts {
        match parse(&op.name, p) {
            Ok(t) => param_types.push(t),
            Err(()) => failed = true,
        }
    }
    let return_type = parse(&op.name, &op.return_type_text)?;
    if failed {
        return Err(());
    }
    Ok(Callable {
        access: op.visibility,
        is_static: op.is_static,
        name: op.name.clone(),
        param_types,
        return_type,
        param_names: Vec::new(),
        body_text: None,
    })
}

fn parse_type_text(text: &str) -> Result<VdmType, (TranslationErrorKind, String)> {
    if text.trim().is_empty() {
        return Err((
            TranslationErrorKind::MissingType,
            "attribute has no type".into(),
        ));
    }
    if looks_abstracted(text) {
        return Err((
            TranslationErrorKind::AbstractedType,
            format!("abstracted type '{text}' is not back-translatable"),
        ));
    }
    parse_vdm_type(text).map_err(|e| {
        (
            TranslationErrorKind::InvalidType,
            format!("invalid type '{text}': {}", e.message),
        )
    })
}

/// Elision markers: `...`, or a `*`/`|` without an operand on one side.
fn looks_abstracted(text: &str) -> bool {
    if text.contains("...") {
        return true;
    }
    let Ok(tokens) = tokenize(text) else {
        return false;
    };
    let is_op = |i: usize| {
        tokens
            .get(i)
            .is_some_and(|t| t.kind == TokenKind::Symbol && (t.text == "*" || t.text == "|"))
    };
    let opens = |i: Option<usize>| match i.and_then(|i| tokens.get(i)) {
        None => true,
        Some(t) => matches!(
            t.text,
            "[" | "(" | "of" | "to" | "map" | "inmap" | "*" | "|"
        ),
    };
    let closes = |i: usize| match tokens.get(i) {
        None => true,
        Some(t) => matches!(t.text, "]" | ")" | "to" | "*" | "|"),
    };
    (0..tokens.len()).any(|i| is_op(i) && (opens(i.checked_sub(1)) || closes(i + 1)))
}
