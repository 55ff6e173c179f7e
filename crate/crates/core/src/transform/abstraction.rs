//! Type abstraction for attribute types that are too deep for a diagram.
//!
//! Compound types fall in two groups: set, seq, optional and map (`C0`,
//! capacity `gamma0`, maps `2 * gamma0`) and product and union (`C1`,
//! capacity `gamma1`). When the number of non-basic nodes below the root
//! exceeds the root's capacity, the type is rendered in elided form.

use crate::model::{Config, VdmType};
use crate::vdm::render_type;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbstractionGroup {
    C0,
    C1,
    NotCompound,
}

pub fn group(t: &VdmType) -> AbstractionGroup {
    match t {
        VdmType::Set(_)
        | VdmType::Set1(_)
        | VdmType::Seq(_)
        | VdmType::Seq1(_)
        | VdmType::Optional(_)
        | VdmType::Map { .. } => AbstractionGroup::C0,
        VdmType::Product(_) | VdmType::Union(_) => AbstractionGroup::C1,
        VdmType::Basic(_) | VdmType::Named(_) | VdmType::Unit => AbstractionGroup::NotCompound,
    }
}

/// Number of non-basic nodes strictly below a compound root. `None` when
/// the root is not compound.
pub fn complexity(t: &VdmType) -> Option<u64> {
    if group(t) == AbstractionGroup::NotCompound {
        return None;
    }
    Some(nodes_below(t))
}

fn nodes_below(t: &VdmType) -> u64 {
    t.children()
        .into_iter()
        .map(|c| u64::from(!c.is_basic()) + nodes_below(c))
        .sum()
}

/// Capacity of a compound root. `None` when the root is not compound.
pub fn capacity(t: &VdmType, config: &Config) -> Option<u64> {
    let gamma0 = u64::from(config.gamma0);
    match t {
        VdmType::Map { .. } => Some(2 * gamma0),
        VdmType::Set(_)
        | VdmType::Set1(_)
        | VdmType::Seq(_)
        | VdmType::Seq1(_)
        | VdmType::Optional(_) => Some(gamma0),
        VdmType::Product(_) | VdmType::Union(_) => Some(u64::from(config.gamma1)),
        _ => None,
    }
}

/// True when [`abstract_type`] elides `t`.
pub fn is_abstracted(t: &VdmType, config: &Config) -> bool {
    match (complexity(t), capacity(t, config)) {
        (Some(n), Some(cap)) => n > cap,
        _ => false,
    }
}

/// Renders an attribute type, eliding it when it exceeds its capacity.
pub fn abstract_type(t: &VdmType, config: &Config) -> String {
    if !is_abstracted(t, config) {
        return render_type(t);
    }
    match t {
        VdmType::Product(ts) => "*".repeat(ts.len() - 1),
        VdmType::Union(ts) => "|".repeat(ts.len() - 1),
        VdmType::Set(inner) => format!("set of {}", marker(inner)),
        VdmType::Set1(inner) => format!("set1 of {}", marker(inner)),
        VdmType::Seq(inner) => format!("seq of {}", marker(inner)),
        VdmType::Seq1(inner) => format!("seq1 of {}", marker(inner)),
        VdmType::Optional(inner) => format!("[{}]", marker(inner)),
        VdmType::Map {
            domain,
            range,
            injective,
        } => format!(
            "{} {} to {}",
            if *injective { "inmap" } else { "map" },
            marker(domain),
            marker(range)
        ),
        VdmType::Basic(_) | VdmType::Named(_) | VdmType::Unit => {
            unreachable!("leaves are never abstracted")
        }
    }
}

/// Elided form of an immediate sub-type. Leaves render as themselves.
fn marker(t: &VdmType) -> String {
    match t {
        VdmType::Basic(_) | VdmType::Named(_) | VdmType::Unit => render_type(t),
        VdmType::Set(_) | VdmType::Set1(_) => "set...".into(),
        VdmType::Seq(_) | VdmType::Seq1(_) => "seq...".into(),
        VdmType::Optional(_) => "[...]".into(),
        VdmType::Map { .. } => "map...".into(),
        VdmType::Product(ts) => "*".repeat(ts.len() - 1),
        VdmType::Union(ts) => "|".repeat(ts.len() - 1),
    }
}
