//! Line-oriented parser for PlantUML-for-VDM class diagrams.

use std::collections::HashMap;

use crate::error::{ParseError, SourceSpan};
use crate::model::{
    Access, AttributeStereotype, Multiplicity, OperationStereotype, Qualifier, UmlAssociation,
    UmlAttribute, UmlClass, UmlGeneralization, UmlModel, UmlOperation,
};

/// Classification of one input line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum LineKind {
    Blank,
    Directive,
    ClassHeader,
    ClassClose,
    Member,
    Association,
    Generalization,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct PumlLine<'a> {
    pub number: usize,
    pub kind: LineKind,
    pub payload: &'a str,
}

/// Where things were declared, for reporting model-level diagnostics.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PumlIndex {
    pub class_lines: HashMap<String, usize>,
    pub association_lines: Vec<usize>,
    pub generalization_lines: Vec<usize>,
}

/// Parses diagram text. The origin used in error spans is `<puml>`.
pub fn parse_puml(text: &str) -> Result<UmlModel, Vec<ParseError>> {
    parse_puml_located(text, "<puml>").map(|(m, _)| m)
}

pub fn parse_puml_located(
    text: &str,
    origin: &str,
) -> Result<(UmlModel, PumlIndex), Vec<ParseError>> {
    let mut model = UmlModel::default();
    let mut index = PumlIndex::default();
    let mut errors = Vec::new();
    let mut open_class: Option<(usize, usize)> = None;
    let mut in_skinparam_block = false;

    for (i, raw) in text.lines().enumerate() {
        let number = i + 1;
        let err = |column: usize, msg: String| {
            ParseError::new(SourceSpan::new(origin, number, column), msg)
        };

        if in_skinparam_block {
            if raw.trim() == "}" {
                in_skinparam_block = false;
            }
            continue;
        }
        let line = classify(raw, number);
        match line.kind {
            LineKind::Blank => {}
            LineKind::Directive => {
                let t = line.payload.trim_end();
                if t.starts_with("skinparam") && t.ends_with('{') {
                    in_skinparam_block = true;
                }
            }
            LineKind::ClassClose => match open_class.take() {
                Some(_) => {}
                None => errors.push(err(indent_of(raw), "'}' without an open class body".into())),
            },
            LineKind::ClassHeader => {
                if let Some((_, header_line)) = open_class {
                    errors.push(err(
                        indent_of(raw),
                        format!("class declaration inside the body of the class opened on line {header_line}"),
                    ));
                    continue;
                }
                match parse_class_header(line.payload) {
                    Ok(header) => {
                        index
                            .class_lines
                            .entry(header.name.clone())
                            .or_insert(number);
                        for parent in header.parents {
                            index.generalization_lines.push(number);
                            model.generalizations.push(UmlGeneralization {
                                child: header.name.clone(),
                                parent,
                            });
                        }
                        model.classes.push(UmlClass::new(header.name));
                        if header.body_open {
                            open_class = Some((model.classes.len() - 1, number));
                        }
                    }
                    Err((col, msg)) => errors.push(err(indent_of(raw) + col, msg)),
                }
            }
            LineKind::Member => {
                let Some((class_idx, _)) = open_class else {
                    errors.push(err(
                        indent_of(raw),
                        format!("unrecognized line '{}'", line.payload.trim()),
                    ));
                    continue;
                };
                match parse_member(line.payload) {
                    Ok(Member::Attribute(a)) => model.classes[class_idx].attributes.push(a),
                    Ok(Member::Operation(o)) => model.classes[class_idx].operations.push(o),
                    Err((col, msg)) => errors.push(err(indent_of(raw) + col, msg)),
                }
            }
            LineKind::Generalization => match parse_generalization(line.payload) {
                Ok(g) => {
                    index.generalization_lines.push(number);
                    model.generalizations.push(g);
                }
                Err((col, msg)) => errors.push(err(indent_of(raw) + col, msg)),
            },
            LineKind::Association => match parse_association(line.payload) {
                Ok(a) => {
                    index.association_lines.push(number);
                    model.associations.push(a);
                }
                Err((col, msg)) => errors.push(err(indent_of(raw) + col, msg)),
            },
        }
        if let (Some((_, header_line)), LineKind::Association | LineKind::Generalization) =
            (open_class, line.kind)
        {
            errors.push(err(
                indent_of(raw),
                format!("relation inside the body of the class opened on line {header_line}"),
            ));
        }
    }
    if let Some((idx, header_line)) = open_class {
        errors.push(ParseError::new(
            SourceSpan::new(origin, header_line, 1),
            format!("class '{}' has an unclosed body", model.classes[idx].name),
        ));
    }
    if errors.is_empty() {
        Ok((model, index))
    } else {
        Err(errors)
    }
}

fn indent_of(raw: &str) -> usize {
    raw.chars().take_while(|c| c.is_whitespace()).count() + 1
}

pub(crate) fn classify(raw: &str, number: usize) -> PumlLine<'_> {
    let payload = raw.trim_start();
    let kind = if payload.trim().is_empty() {
        LineKind::Blank
    } else if is_directive(payload) {
        LineKind::Directive
    } else if payload.trim() == "}" {
        LineKind::ClassClose
    } else if payload == "class"
        || payload.starts_with("class ")
        || payload.starts_with("class{")
        || payload.starts_with("class\t")
    {
        LineKind::ClassHeader
    } else if let Some(kind) = relation_kind(payload) {
        kind
    } else {
        // Outside a class body this is reported as unrecognized.
        LineKind::Member
    };
    PumlLine {
        number,
        kind,
        payload,
    }
}

fn is_directive(line: &str) -> bool {
    const WORDS: [&str; 3] = ["hide", "show", "skinparam"];
    line.starts_with("@startuml")
        || line.starts_with("@enduml")
        || line.starts_with('\'')
        || WORDS.iter().any(|w| {
            line.strip_prefix(w)
                .is_some_and(|rest| rest.is_empty() || rest.starts_with(char::is_whitespace))
        })
}

/// A relation line starts with a class name followed by a qualifier, a
/// quoted label or an arrow.
fn relation_kind(line: &str) -> Option<LineKind> {
    let mut c = Cursor::new(line);
    c.ident()?;
    c.skip_ws();
    let rest = c.rest();
    if rest.starts_with("<|")
        || (rest.starts_with('-') && rest.trim_start_matches('-').starts_with("|>"))
    {
        Some(LineKind::Generalization)
    } else if rest.starts_with('[') || rest.starts_with('"') || rest.starts_with('-') {
        Some(LineKind::Association)
    } else {
        None
    }
}

type LineError = (usize, String);

struct Cursor<'a> {
    line: &'a str,
    /// Byte offset.
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(line: &'a str) -> Cursor<'a> {
        Cursor { line, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.line[self.pos..]
    }

    /// 0-based char column.
    fn column(&self) -> usize {
        self.line[..self.pos].chars().count()
    }

    fn skip_ws(&mut self) {
        let rest = self.rest();
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Option<&'a str> {
        let rest = self.rest();
        let mut chars = rest.char_indices();
        match chars.next() {
            Some((_, c)) if c.is_ascii_alphabetic() || c == '_' => {}
            _ => return None,
        }
        let end = chars
            .find(|(_, c)| !(c.is_ascii_alphanumeric() || *c == '_' || *c == '\''))
            .map_or(rest.len(), |(i, _)| i);
        self.pos += end;
        Some(&rest[..end])
    }

    /// Text up to the bracket matching the one at the cursor, exclusive.
    fn balanced(&mut self, open: char, close: char) -> Option<&'a str> {
        let rest = self.rest();
        if !rest.starts_with(open) {
            return None;
        }
        let mut depth = 0usize;
        for (i, c) in rest.char_indices() {
            if c == open {
                depth += 1;
            } else if c == close {
                depth -= 1;
                if depth == 0 {
                    self.pos += i + c.len_utf8();
                    return Some(&rest[open.len_utf8()..i]);
                }
            }
        }
        None
    }

    fn error(&self, msg: impl Into<String>) -> LineError {
        (self.column(), msg.into())
    }
}

struct ClassHeader {
    name: String,
    parents: Vec<String>,
    body_open: bool,
}

fn parse_class_header(line: &str) -> Result<ClassHeader, LineError> {
    let mut c = Cursor::new(line.trim_end());
    c.eat("class");
    c.skip_ws();
    let name = c
        .ident()
        .ok_or_else(|| c.error("expected a class name after 'class'"))?
        .to_string();
    let mut header = ClassHeader {
        name,
        parents: Vec::new(),
        body_open: false,
    };
    let mut seen_body = false;
    loop {
        c.skip_ws();
        if c.rest().is_empty() {
            return Ok(header);
        }
        if c.eat("is") {
            c.skip_ws();
            if !(c.eat("subclass") && {
                c.skip_ws();
                c.eat("of")
            }) {
                return Err(c.error("expected 'is subclass of'"));
            }
            c.skip_ws();
            let parent = c
                .ident()
                .ok_or_else(|| c.error("expected a superclass name"))?;
            header.parents.push(parent.to_string());
        } else if !seen_body && c.eat("{") {
            seen_body = true;
            c.skip_ws();
            if c.eat("}") {
                continue;
            }
            if !c.rest().is_empty() {
                return Err(c.error("class members must be written on their own lines"));
            }
            header.body_open = true;
            return Ok(header);
        } else if c.rest().starts_with("<<") || c.rest().starts_with('«') {
            return Err(c.error("stereotypes on classes are not supported"));
        } else {
            return Err(c.error(format!("unexpected '{}' in class declaration", c.rest())));
        }
    }
}

enum Member {
    Attribute(UmlAttribute),
    Operation(UmlOperation),
}

fn parse_member(line: &str) -> Result<Member, LineError> {
    let mut c = Cursor::new(line.trim_end());
    let mut visibility = None;
    let mut is_static = false;
    loop {
        c.skip_ws();
        let next = c.rest().chars().next();
        if let Some(sigil) = next.filter(|_| visibility.is_none()) {
            if let Some(access) = Access::from_sigil(sigil) {
                visibility = Some(access);
                c.pos += 1;
                continue;
            }
            if sigil == '~' {
                // package visibility is private in VDM
                visibility = Some(Access::Private);
                c.pos += 1;
                continue;
            }
        }
        if !is_static && (c.eat("{static}") || eat_word(&mut c, "static")) {
            is_static = true;
            continue;
        }
        break;
    }
    let visibility = visibility.unwrap_or_default();
    let name = c
        .ident()
        .ok_or_else(|| c.error("expected an attribute or operation definition"))?
        .to_string();
    c.skip_ws();

    if c.rest().starts_with('(') {
        let params_col = c.column();
        let inner = c.balanced('(', ')').ok_or_else(|| {
            (
                params_col,
                "unbalanced parentheses in parameter list".to_string(),
            )
        })?;
        let param_type_texts = split_params(inner).map_err(|m| (params_col, m))?;
        c.skip_ws();
        let return_type_text = if c.eat(":") {
            let (text, col) = type_text(&mut c);
            if text.is_empty() {
                return Err((
                    col,
                    format!("expected a return type for operation '{name}'"),
                ));
            }
            text
        } else {
            "()".to_string()
        };
        let stereotype = match stereotype(&mut c)? {
            None => OperationStereotype::Operation,
            Some((_, "function")) => OperationStereotype::Function,
            Some((col, other)) => {
                return Err((
                    col,
                    format!("unknown stereotype '<<{other}>>' on operation '{name}'"),
                ))
            }
        };
        return Ok(Member::Operation(UmlOperation {
            visibility,
            is_static,
            name,
            param_type_texts,
            return_type_text,
            stereotype,
        }));
    }

    let type_text = if c.eat(":") {
        let (text, col) = type_text(&mut c);
        if text.is_empty() {
            return Err((col, format!("expected a type for attribute '{name}'")));
        }
        text
    } else if c.rest().is_empty() || c.rest().starts_with("<<") || c.rest().starts_with('«') {
        String::new()
    } else {
        return Err(c.error(format!("expected ':' or '(' after '{name}'")));
    };
    let stereotype = match stereotype(&mut c)? {
        None => AttributeStereotype::InstanceVariable,
        Some((col, "value")) => {
            if is_static {
                return Err((col, format!("value '{name}' cannot be static")));
            }
            AttributeStereotype::Value
        }
        Some((col, "type")) => {
            if is_static {
                return Err((col, format!("type '{name}' cannot be static")));
            }
            AttributeStereotype::Type
        }
        Some((col, other)) => {
            return Err((
                col,
                format!("unknown stereotype '<<{other}>>' on attribute '{name}'"),
            ))
        }
    };
    Ok(Member::Attribute(UmlAttribute {
        visibility,
        is_static,
        name,
        type_text,
        stereotype,
    }))
}

fn eat_word(c: &mut Cursor<'_>, word: &str) -> bool {
    let rest = c.rest();
    match rest.strip_prefix(word) {
        Some(after) if after.starts_with(char::is_whitespace) => {
            c.pos += word.len();
            true
        }
        _ => false,
    }
}

/// Type text up to a stereotype marker or end of line, trimmed.
fn type_text(c: &mut Cursor<'_>) -> (String, usize) {
    c.skip_ws();
    let col = c.column();
    let rest = c.rest();
    let end = [rest.find("<<"), rest.find('«')]
        .into_iter()
        .flatten()
        .min()
        .unwrap_or(rest.len());
    c.pos += end;
    (rest[..end].trim().to_string(), col)
}

/// An optional trailing `<<name>>` (or `«name»`); nothing may follow it.
fn stereotype<'a>(c: &mut Cursor<'a>) -> Result<Option<(usize, &'a str)>, LineError> {
    c.skip_ws();
    let col = c.column();
    let rest = c.rest();
    if rest.is_empty() {
        return Ok(None);
    }
    let (open, close) = if rest.starts_with("<<") {
        ("<<", ">>")
    } else {
        ("«", "»")
    };
    if !rest.starts_with(open) {
        return Err(c.error(format!("unexpected '{rest}'")));
    }
    let body = &rest[open.len()..];
    let end = body
        .find(close)
        .ok_or_else(|| (col, "unterminated stereotype".to_string()))?;
    let name = body[..end].trim();
    c.pos += open.len() + end + close.len();
    c.skip_ws();
    if !c.rest().is_empty() {
        return Err(c.error(format!("unexpected '{}' after stereotype", c.rest())));
    }
    Ok(Some((col, name)))
}

fn split_params(inner: &str) -> Result<Vec<String>, String> {
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut params = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    for ch in inner.chars() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ => {}
        }
        if ch == ',' && depth == 0 {
            params.push(std::mem::take(&mut current));
        } else {
            current.push(ch);
        }
    }
    params.push(current);
    let params: Vec<String> = params.into_iter().map(|p| p.trim().to_string()).collect();
    if params.iter().any(String::is_empty) {
        return Err("empty parameter type in parameter list".into());
    }
    Ok(params)
}

/// Consumes a run of one or more dashes.
fn dashes(c: &mut Cursor<'_>) -> bool {
    let n = c.rest().len() - c.rest().trim_start_matches('-').len();
    c.pos += n;
    n > 0
}

fn parse_generalization(line: &str) -> Result<UmlGeneralization, LineError> {
    let mut c = Cursor::new(line.trim_end());
    let first = c
        .ident()
        .ok_or_else(|| c.error("expected a class name"))?
        .to_string();
    c.skip_ws();
    let child_first = if c.eat("<|") {
        if !dashes(&mut c) {
            return Err(c.error("expected '-' in inheritance arrow"));
        }
        false
    } else {
        dashes(&mut c);
        if !c.eat("|>") {
            return Err(c.error("expected inheritance arrow"));
        }
        true
    };
    c.skip_ws();
    let second = c
        .ident()
        .ok_or_else(|| c.error("expected a class name after the arrow"))?
        .to_string();
    c.skip_ws();
    if !c.rest().is_empty() {
        return Err(c.error(format!("unexpected '{}' after generalization", c.rest())));
    }
    Ok(if child_first {
        UmlGeneralization {
            child: first,
            parent: second,
        }
    } else {
        UmlGeneralization {
            child: second,
            parent: first,
        }
    })
}

fn parse_association(line: &str) -> Result<UmlAssociation, LineError> {
    let mut c = Cursor::new(line.trim_end());
    let source = c
        .ident()
        .ok_or_else(|| c.error("expected a class name"))?
        .to_string();
    c.skip_ws();

    let qualifier = if c.rest().starts_with('[') || c.rest().starts_with("\"[") {
        Some(parse_qualifier(&mut c)?)
    } else {
        None
    };
    c.skip_ws();
    if c.rest().starts_with('"') {
        return Err(c.error("multiplicities on the source end are not supported"));
    }
    if !dashes(&mut c) || !c.eat(">") {
        return Err(c.error("expected an association arrow '-->'"));
    }
    c.skip_ws();
    let multiplicity = if c.rest().starts_with('"') {
        let col = c.column();
        let rest = &c.rest()[1..];
        let end = rest
            .find('"')
            .ok_or_else(|| (col, "unterminated multiplicity label".to_string()))?;
        let label = &rest[..end];
        c.pos += end + 2;
        parse_multiplicity(Some(label)).map_err(|m| (col, m))?
    } else {
        Multiplicity::One
    };
    c.skip_ws();
    let target = c
        .ident()
        .ok_or_else(|| c.error("expected the target class name"))?
        .to_string();
    c.skip_ws();
    let missing_role = || format!("association {source} --> {target} requires a role name");
    if !c.eat(":") {
        if c.rest().is_empty() {
            return Err(c.error(missing_role()));
        }
        return Err(c.error(format!("unexpected '{}' after target class", c.rest())));
    }
    c.skip_ws();
    let role_visibility = match c.rest().chars().next().and_then(Access::from_sigil) {
        Some(a) => {
            c.pos += 1;
            c.skip_ws();
            a
        }
        None => Access::Private,
    };
    if c.rest().is_empty() {
        return Err(c.error(missing_role()));
    }
    let role_name = c
        .ident()
        .ok_or_else(|| c.error(format!("invalid role name '{}'", c.rest())))?
        .to_string();
    c.skip_ws();
    if !c.rest().is_empty() {
        return Err(c.error(format!("unexpected '{}' after role name", c.rest())));
    }
    Ok(UmlAssociation {
        source,
        target,
        role_name,
        role_visibility,
        multiplicity,
        qualifier,
    })
}

/// `[T]`, `[(T)]`, or the quoted spellings `"[T]"`, `"[(T)]"`.
fn parse_qualifier(c: &mut Cursor<'_>) -> Result<Qualifier, LineError> {
    let col = c.column();
    let quoted = c.eat("\"");
    let inner = c
        .balanced('[', ']')
        .ok_or_else(|| (col, "unbalanced brackets in qualifier".to_string()))?
        .trim();
    if quoted && !c.eat("\"") {
        return Err(c.error("expected '\"' after qualifier"));
    }
    let mut unique = false;
    let mut type_text = inner;
    if inner.starts_with('(') {
        let mut ic = Cursor::new(inner);
        if let Some(t) = ic.balanced('(', ')') {
            if ic.rest().trim().is_empty() {
                unique = true;
                type_text = t.trim();
            }
        }
    }
    if type_text.is_empty() {
        return Err((col, "empty qualifier".into()));
    }
    Ok(Qualifier {
        type_text: type_text.to_string(),
        unique,
    })
}

/// Maps a multiplicity label (without quotes) to its variant. `None` is a
/// plain association.
pub fn parse_multiplicity(label: Option<&str>) -> Result<Multiplicity, String> {
    let Some(label) = label else {
        return Ok(Multiplicity::One);
    };
    match label.trim() {
        "*" | "0..*" => Ok(Multiplicity::Set0),
        "1..*" => Ok(Multiplicity::Set1),
        "(*)" | "(0..*)" => Ok(Multiplicity::Seq0),
        "(1..*)" => Ok(Multiplicity::Seq1),
        "0..1" | "(0..1)" => Ok(Multiplicity::Opt),
        other => Err(format!(
            "unrecognized multiplicity \"{other}\"; expected one of \"*\", \"0..*\", \"1..*\", \"(*)\", \"(0..*)\", \"(1..*)\", \"0..1\", \"(0..1)\""
        )),
    }
}
