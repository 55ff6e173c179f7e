//! Abstract syntax for the supported VDM++ subset.
//!
//! Expressions are never parsed: initializers, value expressions and
//! operation/function bodies are kept as raw source text.

use std::fmt;

/// Member visibility. Unspecified access is private on both sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Access {
    Public,
    #[default]
    Private,
    Protected,
}

impl Access {
    pub fn keyword(self) -> &'static str {
        match self {
            Access::Public => "public",
            Access::Private => "private",
            Access::Protected => "protected",
        }
    }

    /// PlantUML visibility sigil.
    pub fn sigil(self) -> char {
        match self {
            Access::Public => '+',
            Access::Private => '-',
            Access::Protected => '#',
        }
    }

    pub fn from_sigil(c: char) -> Option<Access> {
        match c {
            '+' => Some(Access::Public),
            '-' => Some(Access::Private),
            '#' => Some(Access::Protected),
            _ => None,
        }
    }
}

impl fmt::Display for Access {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// The VDM basic types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasicType {
    Bool,
    Nat,
    Nat1,
    Int,
    Rat,
    Real,
    Char,
    Token,
}

impl BasicType {
    pub const ALL: [BasicType; 8] = [
        BasicType::Bool,
        BasicType::Nat,
        BasicType::Nat1,
        BasicType::Int,
        BasicType::Rat,
        BasicType::Real,
        BasicType::Char,
        BasicType::Token,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BasicType::Bool => "bool",
            BasicType::Nat => "nat",
            BasicType::Nat1 => "nat1",
            BasicType::Int => "int",
            BasicType::Rat => "rat",
            BasicType::Real => "real",
            BasicType::Char => "char",
            BasicType::Token => "token",
        }
    }

    pub fn from_name(name: &str) -> Option<BasicType> {
        BasicType::ALL.into_iter().find(|b| b.name() == name)
    }
}

/// A VDM type expression.
///
/// `Named` is a leaf that may refer to a class or to a user-defined type;
/// which one is only decided against a whole model.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum VdmType {
    Basic(BasicType),
    Named(String),
    Set(Box<VdmType>),
    Set1(Box<VdmType>),
    Seq(Box<VdmType>),
    Seq1(Box<VdmType>),
    Optional(Box<VdmType>),
    Map {
        domain: Box<VdmType>,
        range: Box<VdmType>,
        injective: bool,
    },
    /// At least two members.
    Product(Vec<VdmType>),
    /// At least two members.
    Union(Vec<VdmType>),
    /// The empty type `()`, only meaningful as an operation result.
    Unit,
}

impl VdmType {
    pub fn named(name: impl Into<String>) -> VdmType {
        VdmType::Named(name.into())
    }

    pub fn set(inner: VdmType) -> VdmType {
        VdmType::Set(Box::new(inner))
    }

    pub fn set1(inner: VdmType) -> VdmType {
        VdmType::Set1(Box::new(inner))
    }

    pub fn seq(inner: VdmType) -> VdmType {
        VdmType::Seq(Box::new(inner))
    }

    pub fn seq1(inner: VdmType) -> VdmType {
        VdmType::Seq1(Box::new(inner))
    }

    pub fn optional(inner: VdmType) -> VdmType {
        VdmType::Optional(Box::new(inner))
    }

    pub fn map(domain: VdmType, range: VdmType, injective: bool) -> VdmType {
        VdmType::Map {
            domain: Box::new(domain),
            range: Box::new(range),
            injective,
        }
    }

    /// Immediate sub-types, in source order.
    pub fn children(&self) -> Vec<&VdmType> {
        match self {
            VdmType::Basic(_) | VdmType::Named(_) | VdmType::Unit => Vec::new(),
            VdmType::Set(t)
            | VdmType::Set1(t)
            | VdmType::Seq(t)
            | VdmType::Seq1(t)
            | VdmType::Optional(t) => vec![t],
            VdmType::Map { domain, range, .. } => vec![domain, range],
            VdmType::Product(ts) | VdmType::Union(ts) => ts.iter().collect(),
        }
    }

    /// True for leaves that never count as type structure.
    pub fn is_basic(&self) -> bool {
        matches!(self, VdmType::Basic(_) | VdmType::Unit)
    }

    /// Product and Union arity holds everywhere in the tree.
    pub fn is_well_formed(&self) -> bool {
        let arity_ok = match self {
            VdmType::Product(ts) | VdmType::Union(ts) => ts.len() >= 2,
            _ => true,
        };
        arity_ok && self.children().into_iter().all(VdmType::is_well_formed)
    }

    /// Every `Named` leaf in the tree, left to right.
    pub fn named_leaves(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_named(&mut out);
        out
    }

    fn collect_named<'a>(&'a self, out: &mut Vec<&'a str>) {
        if let VdmType::Named(n) = self {
            out.push(n);
        }
        for c in self.children() {
            c.collect_named(out);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceVariable {
    pub access: Access,
    pub is_static: bool,
    pub name: String,
    pub var_type: VdmType,
    pub init_text: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueDef {
    pub access: Access,
    pub name: String,
    pub val_type: VdmType,
    pub expr_text: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeDef {
    pub access: Access,
    pub name: String,
    pub definition: VdmType,
}

/// Explicit operation or function definition.
///
/// `param_names` are the names used in the definition line; they are only
/// meaningful together with a body and may be empty otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Callable {
    pub access: Access,
    pub is_static: bool,
    pub name: String,
    pub param_types: Vec<VdmType>,
    pub return_type: VdmType,
    pub param_names: Vec<String>,
    pub body_text: Option<String>,
}

pub type OperationDef = Callable;
pub type FunctionDef = Callable;

/// One member of a class, as a borrowed view over the five member lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VdmMember<'a> {
    InstanceVariable(&'a InstanceVariable),
    Value(&'a ValueDef),
    Type(&'a TypeDef),
    Operation(&'a OperationDef),
    Function(&'a FunctionDef),
}

impl<'a> VdmMember<'a> {
    pub fn name(&self) -> &'a str {
        match self {
            VdmMember::InstanceVariable(m) => &m.name,
            VdmMember::Value(m) => &m.name,
            VdmMember::Type(m) => &m.name,
            VdmMember::Operation(m) | VdmMember::Function(m) => &m.name,
        }
    }

    pub fn access(&self) -> Access {
        match self {
            VdmMember::InstanceVariable(m) => m.access,
            VdmMember::Value(m) => m.access,
            VdmMember::Type(m) => m.access,
            VdmMember::Operation(m) | VdmMember::Function(m) => m.access,
        }
    }

    pub fn types(&self) -> Vec<&'a VdmType> {
        match self {
            VdmMember::InstanceVariable(m) => vec![&m.var_type],
            VdmMember::Value(m) => vec![&m.val_type],
            VdmMember::Type(m) => vec![&m.definition],
            VdmMember::Operation(m) | VdmMember::Function(m) => m
                .param_types
                .iter()
                .chain(std::iter::once(&m.return_type))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VdmClass {
    pub name: String,
    pub superclasses: Vec<String>,
    pub instance_variables: Vec<InstanceVariable>,
    pub values: Vec<ValueDef>,
    pub type_defs: Vec<TypeDef>,
    pub operations: Vec<OperationDef>,
    pub functions: Vec<FunctionDef>,
}

impl VdmClass {
    pub fn new(name: impl Into<String>) -> VdmClass {
        VdmClass {
            name: name.into(),
            ..VdmClass::default()
        }
    }

    /// All members in canonical block order: values, types, instance
    /// variables, operations, functions.
    pub fn members(&self) -> Vec<VdmMember<'_>> {
        let mut out = Vec::new();
        out.extend(self.values.iter().map(VdmMember::Value));
        out.extend(self.type_defs.iter().map(VdmMember::Type));
        out.extend(
            self.instance_variables
                .iter()
                .map(VdmMember::InstanceVariable),
        );
        out.extend(self.operations.iter().map(VdmMember::Operation));
        out.extend(self.functions.iter().map(VdmMember::Function));
        out
    }

    pub fn member_count(&self) -> usize {
        self.instance_variables.len()
            + self.values.len()
            + self.type_defs.len()
            + self.operations.len()
            + self.functions.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VdmModel {
    pub classes: Vec<VdmClass>,
}

impl VdmModel {
    pub fn new(classes: Vec<VdmClass>) -> VdmModel {
        VdmModel { classes }
    }

    pub fn class(&self, name: &str) -> Option<&VdmClass> {
        self.classes.iter().find(|c| c.name == name)
    }

    pub fn class_names(&self) -> std::collections::BTreeSet<&str> {
        self.classes.iter().map(|c| c.name.as_str()).collect()
    }

    /// Drops everything a UML diagram cannot carry: bodies, parameter
    /// names, initializers and value expressions. Members are sorted by
    /// name within each block so models that differ only in member order
    /// compare equal.
    pub fn canonicalize(&self) -> VdmModel {
        let classes = self
            .classes
            .iter()
            .map(|c| {
                let mut c = c.clone();
                for iv in &mut c.instance_variables {
                    iv.init_text = None;
                }
                for v in &mut c.values {
                    v.expr_text = crate::vdm::UNDEFINED_VALUE.to_string();
                }
                for op in c.operations.iter_mut().chain(c.functions.iter_mut()) {
                    op.body_text = None;
                    op.param_names.clear();
                }
                c.instance_variables.sort_by(|a, b| a.name.cmp(&b.name));
                c.values.sort_by(|a, b| a.name.cmp(&b.name));
                c.type_defs.sort_by(|a, b| a.name.cmp(&b.name));
                c.operations.sort_by(|a, b| a.name.cmp(&b.name));
                c.functions.sort_by(|a, b| a.name.cmp(&b.name));
                c
            })
            .collect();
        VdmModel { classes }
    }
}

/// `[A-Za-z_][A-Za-z0-9_']*`, excluding reserved words.
pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'') && !crate::vdm::is_reserved(s)
}
