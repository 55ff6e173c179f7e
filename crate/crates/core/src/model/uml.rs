//! Class-diagram model with VDM-specific stereotypes.

use super::vdm::Access;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AttributeStereotype {
    // Ordered by canonical print position.
    Value,
    Type,
    /// No marker in concrete syntax.
    InstanceVariable,
}

impl AttributeStereotype {
    pub fn marker(self) -> Option<&'static str> {
        match self {
            AttributeStereotype::Value => Some("value"),
            AttributeStereotype::Type => Some("type"),
            AttributeStereotype::InstanceVariable => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OperationStereotype {
    /// No marker in concrete syntax.
    Operation,
    Function,
}

impl OperationStereotype {
    pub fn marker(self) -> Option<&'static str> {
        match self {
            OperationStereotype::Operation => None,
            OperationStereotype::Function => Some("function"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UmlAttribute {
    pub visibility: Access,
    pub is_static: bool,
    pub name: String,
    /// Empty when the diagram gives no type.
    pub type_text: String,
    pub stereotype: AttributeStereotype,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UmlOperation {
    pub visibility: Access,
    pub is_static: bool,
    pub name: String,
    pub param_type_texts: Vec<String>,
    /// `()` when the operation returns nothing.
    pub return_type_text: String,
    pub stereotype: OperationStereotype,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UmlClass {
    pub name: String,
    pub attributes: Vec<UmlAttribute>,
    pub operations: Vec<UmlOperation>,
}

impl UmlClass {
    pub fn new(name: impl Into<String>) -> UmlClass {
        UmlClass {
            name: name.into(),
            ..UmlClass::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UmlGeneralization {
    pub child: String,
    pub parent: String,
}

/// Association-end multiplicity. `Seq0`/`Seq1` are the ordered forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Multiplicity {
    One,
    Opt,
    Set0,
    Set1,
    Seq0,
    Seq1,
}

impl Multiplicity {
    pub const ALL: [Multiplicity; 6] = [
        Multiplicity::One,
        Multiplicity::Opt,
        Multiplicity::Set0,
        Multiplicity::Set1,
        Multiplicity::Seq0,
        Multiplicity::Seq1,
    ];

    /// Canonical label, `None` for a plain association.
    pub fn label(self) -> Option<&'static str> {
        match self {
            Multiplicity::One => None,
            Multiplicity::Opt => Some("0..1"),
            Multiplicity::Set0 => Some("0..*"),
            Multiplicity::Set1 => Some("1..*"),
            Multiplicity::Seq0 => Some("(0..*)"),
            Multiplicity::Seq1 => Some("(1..*)"),
        }
    }

    pub fn is_ordered(self) -> bool {
        matches!(self, Multiplicity::Seq0 | Multiplicity::Seq1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Qualifier {
    pub type_text: String,
    /// Written by parenthesising the qualifier; maps to `inmap`.
    pub unique: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UmlAssociation {
    pub source: String,
    pub target: String,
    pub role_name: String,
    pub role_visibility: Access,
    pub multiplicity: Multiplicity,
    pub qualifier: Option<Qualifier>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UmlModel {
    pub classes: Vec<UmlClass>,
    pub generalizations: Vec<UmlGeneralization>,
    pub associations: Vec<UmlAssociation>,
}

impl UmlModel {
    pub fn class(&self, name: &str) -> Option<&UmlClass> {
        self.classes.iter().find(|c| c.name == name)
    }

    /// Orders members the way the printer emits them: values, types,
    /// instance variables; then operations, functions. Stable otherwise.
    pub fn canonicalize(&self) -> UmlModel {
        let mut out = self.clone();
        for c in &mut out.classes {
            c.attributes.sort_by_key(|a| a.stereotype);
            c.operations.sort_by_key(|o| o.stereotype);
        }
        out
    }
}
