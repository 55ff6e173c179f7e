//! Recursive-descent parser for VDM++ class files.
//!
//! Structure is parsed down to member signatures. Initializers, value
//! expressions and bodies are captured as raw source text by
//! bracket-balanced scanning up to the next `;` or block keyword.

use super::lexer::{tokenize, Token, TokenKind};
use crate::error::{ParseError, SourceSpan};
use crate::model::{
    Access, Callable, InstanceVariable, TypeDef, ValueDef, VdmClass, VdmModel, VdmType,
};

/// Keywords that open a class-body block or close a class.
const BOUNDARY_KEYWORDS: [&str; 10] = [
    "instance",
    "values",
    "types",
    "operations",
    "functions",
    "thread",
    "sync",
    "traces",
    "end",
    "class",
];

const UNSUPPORTED_BLOCKS: [&str; 3] = ["thread", "sync", "traces"];

pub(crate) struct Parser<'a> {
    src: &'a str,
    file: String,
    tokens: Vec<Token<'a>>,
    pos: usize,
}

impl<'a> Parser<'a> {
    pub(crate) fn new(src: &'a str, file: &str) -> Result<Parser<'a>, ParseError> {
        let tokens = tokenize(src)
            .map_err(|e| ParseError::new(SourceSpan::new(file, e.line, e.column), e.message))?;
        Ok(Parser {
            src,
            file: file.to_string(),
            tokens,
            pos: 0,
        })
    }

    pub(crate) fn peek(&self) -> Option<&Token<'a>> {
        self.tokens.get(self.pos)
    }

    fn peek_nth(&self, n: usize) -> Option<&Token<'a>> {
        self.tokens.get(self.pos + n)
    }

    pub(crate) fn advance(&mut self) -> Option<Token<'a>> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    pub(crate) fn at_symbol(&self, sym: &str) -> bool {
        self.peek().is_some_and(|t| t.is_symbol(sym))
    }

    pub(crate) fn eat_symbol(&mut self, sym: &str) -> bool {
        if self.at_symbol(sym) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn at_keyword(&self, word: &str) -> bool {
        self.peek().is_some_and(|t| t.is_ident(word))
    }

    fn eat_keyword(&mut self, word: &str) -> bool {
        if self.at_keyword(word) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect_symbol(&mut self, sym: &str) -> Result<(), ParseError> {
        if self.eat_symbol(sym) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{sym}'")))
        }
    }

    pub(crate) fn expect_keyword(&mut self, word: &str) -> Result<(), ParseError> {
        if self.eat_keyword(word) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{word}'")))
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<String, ParseError> {
        match self.peek() {
            Some(t) if t.kind == TokenKind::Ident && !super::is_reserved(t.text) => {
                let name = t.text.to_string();
                self.pos += 1;
                Ok(name)
            }
            _ => Err(self.unexpected(what)),
        }
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        let found = self
            .peek()
            .map_or_else(|| "end of input".to_string(), |t| format!("'{}'", t.text));
        self.error_here(format!("expected {expected}, found {found}"))
            .expected(expected)
    }

    pub(crate) fn error_at(&self, tok: &Token<'_>, message: impl Into<String>) -> ParseError {
        ParseError::new(SourceSpan::new(&self.file, tok.line, tok.column), message)
    }

    pub(crate) fn error_here(&self, message: impl Into<String>) -> ParseError {
        match self.peek() {
            Some(t) => self.error_at(t, message),
            None => {
                let (line, column) = end_position(self.src);
                ParseError::new(SourceSpan::new(&self.file, line, column), message)
            }
        }
    }

    fn span_of(&self, tok: &Token<'_>) -> SourceSpan {
        SourceSpan::new(&self.file, tok.line, tok.column)
    }

    fn at_boundary(&self) -> bool {
        match self.peek() {
            None => true,
            Some(t) => t.kind == TokenKind::Ident && BOUNDARY_KEYWORDS.contains(&t.text),
        }
    }

    /// Skips to the next block keyword, `end` or `class` outside brackets.
    fn recover(&mut self) {
        let mut depth = 0usize;
        while let Some(t) = self.peek() {
            if depth == 0 && self.at_boundary() {
                return;
            }
            depth = next_depth(depth, t);
            self.pos += 1;
        }
    }

    /// Raw text from here to the next top-level `;` or block keyword. The
    /// terminator is not consumed.
    fn capture_raw(&mut self) -> Option<String> {
        let start = self.pos;
        let mut depth = 0usize;
        while let Some(t) = self.peek() {
            if depth == 0 && (t.is_symbol(";") || self.at_boundary()) {
                break;
            }
            depth = next_depth(depth, t);
            self.pos += 1;
        }
        if self.pos == start {
            return None;
        }
        let (from, to) = (self.tokens[start].start, self.tokens[self.pos - 1].end);
        Some(self.src[from..to].to_string())
    }

    fn expect_terminator(&mut self) -> Result<(), ParseError> {
        if self.eat_symbol(";") || self.at_boundary() {
            Ok(())
        } else {
            Err(self.unexpected("';'"))
        }
    }

    fn parse_document(&mut self) -> (Vec<(VdmClass, SourceSpan)>, Vec<ParseError>) {
        let mut classes = Vec::new();
        let mut errors = Vec::new();
        while let Some(tok) = self.peek().cloned() {
            if tok.is_ident("class") {
                let span = self.span_of(&tok);
                match self.parse_class(&mut errors) {
                    Ok(class) => classes.push((class, span)),
                    Err(e) => {
                        errors.push(e);
                        self.skip_to_class();
                    }
                }
            } else {
                errors.push(
                    self.error_at(&tok, format!("expected 'class', found '{}'", tok.text))
                        .expected("'class'"),
                );
                self.skip_to_class();
            }
        }
        (classes, errors)
    }

    fn skip_to_class(&mut self) {
        self.pos += 1;
        while self.peek().is_some_and(|t| !t.is_ident("class")) {
            self.pos += 1;
        }
    }

    fn parse_class(&mut self, errors: &mut Vec<ParseError>) -> Result<VdmClass, ParseError> {
        self.expect_keyword("class")?;
        let name = self.expect_ident("class name")?;
        let mut class = VdmClass::new(&name);
        if self.eat_keyword("is") {
            self.expect_keyword("subclass")?;
            self.expect_keyword("of")?;
            class
                .superclasses
                .push(self.expect_ident("superclass name")?);
            while self.eat_symbol(",") {
                class
                    .superclasses
                    .push(self.expect_ident("superclass name")?);
            }
        }
        loop {
            let Some(tok) = self.peek().cloned() else {
                return Err(self
                    .error_here(format!("missing 'end {name}'"))
                    .expected(format!("'end {name}'")));
            };
            match tok.text {
                "end" if tok.kind == TokenKind::Ident => {
                    self.advance();
                    let closing = self.expect_ident(&format!("'{name}' after 'end'"))?;
                    if closing != name {
                        return Err(self.error_at(
                            &self.tokens[self.pos - 1].clone(),
                            format!("class '{name}' is closed by 'end {closing}'"),
                        ));
                    }
                    return Ok(class);
                }
                "class" => {
                    return Err(
                        self.error_at(&tok, format!("missing 'end {name}' before next class"))
                    );
                }
                "instance" => {
                    self.advance();
                    if let Err(e) = self.expect_keyword("variables") {
                        errors.push(e);
                        self.recover();
                        continue;
                    }
                    self.parse_block(errors, |p| {
                        let iv = p.parse_instance_variable()?;
                        class.instance_variables.push(iv);
                        Ok(())
                    });
                }
                "values" => {
                    self.advance();
                    self.parse_block(errors, |p| {
                        let v = p.parse_value()?;
                        class.values.push(v);
                        Ok(())
                    });
                }
                "types" => {
                    self.advance();
                    self.parse_block(errors, |p| {
                        let t = p.parse_type_def()?;
                        class.type_defs.push(t);
                        Ok(())
                    });
                }
                "operations" => {
                    self.advance();
                    self.parse_block(errors, |p| {
                        let op = p.parse_callable("==>")?;
                        class.operations.push(op);
                        Ok(())
                    });
                }
                "functions" => {
                    self.advance();
                    self.parse_block(errors, |p| {
                        let f = p.parse_callable("->")?;
                        class.functions.push(f);
                        Ok(())
                    });
                }
                kw if UNSUPPORTED_BLOCKS.contains(&kw) && tok.kind == TokenKind::Ident => {
                    errors.push(self.error_at(&tok, format!("unsupported construct '{kw}'")));
                    self.advance();
                    self.recover();
                }
                other => {
                    errors.push(
                        self.error_at(
                            &tok,
                            format!("expected a definition block, found '{other}'"),
                        )
                        .expected("definition block"),
                    );
                    self.advance();
                    self.recover();
                }
            }
        }
    }

    /// Parses definitions until the next block boundary. A malformed
    /// definition is reported and the rest of the block is skipped.
    fn parse_block<F>(&mut self, errors: &mut Vec<ParseError>, mut item: F)
    where
        F: FnMut(&mut Parser<'a>) -> Result<(), ParseError>,
    {
        while !self.at_boundary() {
            if let Err(e) = item(self) {
                errors.push(e);
                self.recover();
                return;
            }
        }
    }

    fn parse_access_static(&mut self) -> (Option<Access>, bool, Option<Token<'a>>) {
        let mut access = None;
        let mut is_static = false;
        let mut static_tok = None;
        for _ in 0..2 {
            let Some(t) = self.peek().cloned() else { break };
            let parsed = match t.text {
                "public" => Some(Access::Public),
                "private" => Some(Access::Private),
                "protected" => Some(Access::Protected),
                _ => None,
            };
            if parsed.is_some() && access.is_none() {
                access = parsed;
                self.advance();
            } else if t.is_ident("static") && !is_static {
                is_static = true;
                static_tok = Some(t);
                self.advance();
            } else {
                break;
            }
        }
        (access, is_static, static_tok)
    }

    fn parse_instance_variable(&mut self) -> Result<InstanceVariable, ParseError> {
        if let Some(t) = self.peek().filter(|t| t.is_ident("inv")).cloned() {
            return Err(self.error_at(
                &t,
                "unsupported construct 'inv' (instance variable invariant)",
            ));
        }
        let (access, is_static, _) = self.parse_access_static();
        let name = self.expect_ident("instance variable name")?;
        self.expect_symbol(":")?;
        let var_type = self.parse_type()?;
        let init_text = if self.eat_symbol(":=") {
            Some(
                self.capture_raw()
                    .ok_or_else(|| self.error_here("expected an initializer after ':='"))?,
            )
        } else {
            None
        };
        self.expect_terminator()?;
        Ok(InstanceVariable {
            access: access.unwrap_or_default(),
            is_static,
            name,
            var_type,
            init_text,
        })
    }

    fn parse_value(&mut self) -> Result<ValueDef, ParseError> {
        let (access, _, static_tok) = self.parse_access_static();
        if let Some(t) = static_tok {
            return Err(self.error_at(&t, "values cannot be static"));
        }
        let name = self.expect_ident("value name")?;
        if !self.at_symbol(":") {
            return Err(self
                .error_here(format!("value '{name}' needs an explicit type"))
                .expected("':'"));
        }
        self.advance();
        let val_type = self.parse_type()?;
        self.expect_symbol("=")?;
        let expr_text = self
            .capture_raw()
            .ok_or_else(|| self.error_here(format!("expected an expression for value '{name}'")))?;
        self.expect_terminator()?;
        Ok(ValueDef {
            access: access.unwrap_or_default(),
            name,
            val_type,
            expr_text,
        })
    }

    fn parse_type_def(&mut self) -> Result<TypeDef, ParseError> {
        let (access, _, static_tok) = self.parse_access_static();
        if let Some(t) = static_tok {
            return Err(self.error_at(&t, "type definitions cannot be static"));
        }
        let name = self.expect_ident("type name")?;
        if self.at_symbol("::") {
            return Err(self.error_here(format!("record type '{name}' is not supported")));
        }
        self.expect_symbol("=")?;
        let definition = self.parse_type()?;
        if let Some(t) = self.peek().cloned() {
            if ["inv", "eq", "ord"].iter().any(|k| t.is_ident(k)) {
                return Err(self.error_at(
                    &t,
                    format!("unsupported construct '{}' on type '{name}'", t.text),
                ));
            }
        }
        self.expect_terminator()?;
        Ok(TypeDef {
            access: access.unwrap_or_default(),
            name,
            definition,
        })
    }

    /// Explicit operation (`arrow` = `==>`) or function (`->`) definition.
    fn parse_callable(&mut self, arrow: &str) -> Result<Callable, ParseError> {
        let kind = if arrow == "==>" {
            "operation"
        } else {
            "function"
        };
        let (access, is_static, _) = self.parse_access_static();
        let name = self.expect_ident(&format!("{kind} name"))?;
        if self.at_symbol("(") {
            return Err(self.error_here(format!(
                "implicit {kind} definition '{name}' is not supported"
            )));
        }
        self.expect_symbol(":")?;
        let param_types = self.parse_param_types()?;
        self.expect_symbol(arrow)?;
        let return_type = self.parse_type()?;

        let def_tok = self.peek().cloned();
        let def_name = self.expect_ident(&format!("definition of '{name}'"))?;
        if def_name != name {
            let tok = def_tok.expect("identifier was just consumed");
            return Err(self.error_at(
                &tok,
                format!("definition '{def_name}' does not match signature '{name}'"),
            ));
        }
        self.expect_symbol("(")?;
        let mut param_names = Vec::new();
        if !self.at_symbol(")") {
            param_names.push(self.expect_ident("parameter name")?);
            while self.eat_symbol(",") {
                param_names.push(self.expect_ident("parameter name")?);
            }
        }
        let close = self.peek().cloned();
        self.expect_symbol(")")?;
        if param_names.len() != param_types.len() {
            let tok = close.expect("')' was just consumed");
            return Err(self.error_at(
                &tok,
                format!(
                    "{kind} '{name}' takes {} parameter(s) but its definition names {}",
                    param_types.len(),
                    param_names.len()
                ),
            ));
        }
        self.expect_symbol("==")?;
        let body_text = self
            .capture_raw()
            .ok_or_else(|| self.error_here(format!("expected a body for {kind} '{name}'")))?;
        self.expect_terminator()?;
        Ok(Callable {
            access: access.unwrap_or_default(),
            is_static,
            name,
            param_types,
            return_type,
            param_names,
            body_text: Some(body_text),
        })
    }

    /// The domain of a signature: `()` for none, otherwise `*`-separated
    /// parameter types. A top-level union is a single parameter.
    fn parse_param_types(&mut self) -> Result<Vec<VdmType>, ParseError> {
        if self.at_symbol("(") && self.peek_nth(1).is_some_and(|t| t.is_symbol(")")) {
            self.pos += 2;
            return Ok(Vec::new());
        }
        let mut operands = self.parse_product_operands()?;
        if !self.at_symbol("|") {
            return Ok(operands);
        }
        let first = if operands.len() == 1 {
            operands.remove(0)
        } else {
            VdmType::Product(operands)
        };
        let mut members = vec![first];
        while self.eat_symbol("|") {
            members.push(self.parse_product()?);
        }
        Ok(vec![VdmType::Union(members)])
    }
}

fn next_depth(depth: usize, t: &Token<'_>) -> usize {
    match (t.kind, t.text) {
        (TokenKind::Symbol, "(" | "[" | "{") | (TokenKind::Ident, "cases") => depth + 1,
        (TokenKind::Symbol, ")" | "]" | "}") | (TokenKind::Ident, "end") => depth.saturating_sub(1),
        _ => depth,
    }
}

fn end_position(src: &str) -> (usize, usize) {
    let line = src.matches('\n').count() + 1;
    let last = src.rsplit('\n').next().unwrap_or("");
    (line, last.chars().count() + 1)
}

/// Parses VDM++ source into a model. All recoverable errors are reported.
pub fn parse_vdm(source: &str, origin: &str) -> Result<VdmModel, Vec<ParseError>> {
    parse_vdm_located(source, origin).map(|(m, _)| m)
}

/// Like [`parse_vdm`], also returning the span of each class header.
pub fn parse_vdm_located(
    source: &str,
    origin: &str,
) -> Result<(VdmModel, Vec<SourceSpan>), Vec<ParseError>> {
    let mut parser = Parser::new(source, origin).map_err(|e| vec![e])?;
    let (classes, errors) = parser.parse_document();
    if !errors.is_empty() {
        return Err(errors);
    }
    let (classes, spans) = classes.into_iter().unzip();
    Ok((VdmModel { classes }, spans))
}
