use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Severity {
    Warning,
    Error,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Warning => "warning",
            Severity::Error => "error",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiagnosticKind {
    DuplicateClass,
    DuplicateMember,
    DuplicateSuperclass,
    UnresolvedSuperclass,
    SelfInheritance,
    InheritanceCycle,
    InvalidIdentifier,
    MalformedType,
    StaticValue,
    MissingRole,
    UnresolvedEndpoint,
    DuplicateGeneralization,
    /// A plain attribute whose type would translate back as an association.
    AssociationShapedAttribute,
}

/// A model-level finding. Diagnostics are returned, never raised.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub kind: DiagnosticKind,
    pub message: String,
    pub class: Option<String>,
    pub member: Option<String>,
}

impl Diagnostic {
    pub fn error(kind: DiagnosticKind, message: impl Into<String>) -> Diagnostic {
        Diagnostic {
            severity: Severity::Error,
            kind,
            message: message.into(),
            class: None,
            member: None,
        }
    }

    pub fn warning(kind: DiagnosticKind, message: impl Into<String>) -> Diagnostic {
        Diagnostic {
            severity: Severity::Warning,
            ..Diagnostic::error(kind, message)
        }
    }

    pub fn in_class(mut self, class: impl Into<String>) -> Diagnostic {
        self.class = Some(class.into());
        self
    }

    pub fn on_member(mut self, member: impl Into<String>) -> Diagnostic {
        self.member = Some(member.into());
        self
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.severity, self.message)
    }
}

pub fn has_errors(diags: &[Diagnostic]) -> bool {
    diags.iter().any(Diagnostic::is_error)
}
