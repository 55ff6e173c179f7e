//! Type expressions: recursive-descent parsing and canonical rendering.
//!
//! Precedence, loosest first: `|`, `*`, then the prefix forms
//! (`set of`, `set1 of`, `seq of`, `seq1 of`, `map .. to ..`). A map's range
//! extends as far as possible, so maps nested in other types are always
//! rendered in parentheses.

use super::parser::Parser;
use crate::error::ParseError;
use crate::model::{BasicType, VdmType};

impl<'a> Parser<'a> {
    pub(crate) fn parse_type(&mut self) -> Result<VdmType, ParseError> {
        let first = self.parse_product()?;
        if !self.at_symbol("|") {
            return Ok(first);
        }
        let mut members = vec![first];
        while self.eat_symbol("|") {
            members.push(self.parse_product()?);
        }
        Ok(VdmType::Union(members))
    }

    pub(crate) fn parse_product(&mut self) -> Result<VdmType, ParseError> {
        let mut members = self.parse_product_operands()?;
        Ok(if members.len() == 1 {
            members.remove(0)
        } else {
            VdmType::Product(members)
        })
    }

    /// The `*`-separated operands at the current position.
    pub(crate) fn parse_product_operands(&mut self) -> Result<Vec<VdmType>, ParseError> {
        let mut members = vec![self.parse_prefix()?];
        while self.eat_symbol("*") {
            members.push(self.parse_prefix()?);
        }
        Ok(members)
    }

    fn parse_prefix(&mut self) -> Result<VdmType, ParseError> {
        let Some(tok) = self.peek() else {
            return Err(self.error_here("expected a type").expected("type"));
        };
        let ctor: Option<fn(VdmType) -> VdmType> = match tok.text {
            "set" => Some(VdmType::set),
            "set1" => Some(VdmType::set1),
            "seq" => Some(VdmType::seq),
            "seq1" => Some(VdmType::seq1),
            _ => None,
        };
        if let (Some(ctor), super::lexer::TokenKind::Ident) = (ctor, tok.kind) {
            self.advance();
            self.expect_keyword("of")?;
            return Ok(ctor(self.parse_prefix()?));
        }
        if tok.is_ident("map") || tok.is_ident("inmap") {
            let injective = tok.text == "inmap";
            self.advance();
            let domain = self.parse_type()?;
            self.expect_keyword("to")?;
            let range = self.parse_type()?;
            return Ok(VdmType::map(domain, range, injective));
        }
        self.parse_atom()
    }

    fn parse_atom(&mut self) -> Result<VdmType, ParseError> {
        let Some(tok) = self.peek().cloned() else {
            return Err(self.error_here("expected a type").expected("type"));
        };
        if tok.is_symbol("[") {
            self.advance();
            let inner = self.parse_type()?;
            self.expect_symbol("]")?;
            return Ok(VdmType::optional(inner));
        }
        if tok.is_symbol("(") {
            self.advance();
            if self.eat_symbol(")") {
                return Ok(VdmType::Unit);
            }
            let inner = self.parse_type()?;
            self.expect_symbol(")")?;
            return Ok(inner);
        }
        if tok.kind == super::lexer::TokenKind::Ident {
            if let Some(basic) = BasicType::from_name(tok.text) {
                self.advance();
                return Ok(VdmType::Basic(basic));
            }
            if !super::is_reserved(tok.text) {
                self.advance();
                return Ok(VdmType::Named(tok.text.to_string()));
            }
        }
        Err(self
            .error_at(&tok, format!("expected a type, found '{}'", tok.text))
            .expected("type"))
    }
}

/// Parses a standalone type expression such as `inmap Type to seq of B`.
pub fn parse_vdm_type(text: &str) -> Result<VdmType, ParseError> {
    let mut p = Parser::new(text, "<type>")?;
    let t = p.parse_type()?;
    if let Some(tok) = p.peek().cloned() {
        return Err(p.error_at(&tok, format!("unexpected '{}' after type", tok.text)));
    }
    Ok(t)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Context {
    Top,
    UnionMember,
    ProductMember,
    PrefixOperand,
}

/// Renders a type in VDM concrete syntax, parenthesising only where the
/// parser would otherwise build a different tree.
pub fn render_type(t: &VdmType) -> String {
    let mut out = String::new();
    render_into(t, Context::Top, &mut out);
    out
}

/// Renders one parameter of a `*`-separated signature domain.
pub(crate) fn render_product_member(t: &VdmType) -> String {
    let mut out = String::new();
    render_into(t, Context::ProductMember, &mut out);
    out
}

fn render_into(t: &VdmType, ctx: Context, out: &mut String) {
    let needs_parens = match t {
        VdmType::Map { .. } => ctx != Context::Top,
        VdmType::Union(_) => ctx != Context::Top,
        VdmType::Product(_) => matches!(ctx, Context::ProductMember | Context::PrefixOperand),
        _ => false,
    };
    if needs_parens {
        out.push('(');
    }
    match t {
        VdmType::Basic(b) => out.push_str(b.name()),
        VdmType::Named(n) => out.push_str(n),
        VdmType::Unit => out.push_str("()"),
        VdmType::Set(inner) => prefixed("set of ", inner, out),
        VdmType::Set1(inner) => prefixed("set1 of ", inner, out),
        VdmType::Seq(inner) => prefixed("seq of ", inner, out),
        VdmType::Seq1(inner) => prefixed("seq1 of ", inner, out),
        VdmType::Optional(inner) => {
            out.push('[');
            render_into(inner, Context::Top, out);
            out.push(']');
        }
        VdmType::Map {
            domain,
            range,
            injective,
        } => {
            out.push_str(if *injective { "inmap " } else { "map " });
            // A map domain is closed by `to`, but a nested map reads badly.
            let dctx = if matches!(**domain, VdmType::Map { .. }) {
                Context::PrefixOperand
            } else {
                Context::Top
            };
            render_into(domain, dctx, out);
            out.push_str(" to ");
            render_into(range, Context::Top, out);
        }
        VdmType::Product(ts) => joined(ts, " * ", Context::ProductMember, out),
        VdmType::Union(ts) => joined(ts, " | ", Context::UnionMember, out),
    }
    if needs_parens {
        out.push(')');
    }
}

fn prefixed(keyword: &str, inner: &VdmType, out: &mut String) {
    out.push_str(keyword);
    render_into(inner, Context::PrefixOperand, out);
}

fn joined(ts: &[VdmType], sep: &str, ctx: Context, out: &mut String) {
    for (i, t) in ts.iter().enumerate() {
        if i > 0 {
            out.push_str(sep);
        }
        render_into(t, ctx, out);
    }
}
