//! Tokenizer shared by the class parser and the type parser.
//!
//! The lexer is total: characters it does not know become single-character
//! symbols, so arbitrary expression text inside bodies tokenizes and can be
//! skipped by bracket counting.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Ident,
    Number,
    Str,
    Char,
    Symbol,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token<'a> {
    pub kind: TokenKind,
    pub text: &'a str,
    /// Byte offsets into the source.
    pub start: usize,
    pub end: usize,
    pub line: usize,
    pub column: usize,
}

impl Token<'_> {
    pub fn is_ident(&self, word: &str) -> bool {
        self.kind == TokenKind::Ident && self.text == word
    }

    pub fn is_symbol(&self, sym: &str) -> bool {
        self.kind == TokenKind::Symbol && self.text == sym
    }
}

const MULTI_SYMBOLS: [&str; 6] = ["==>", "...", "==", "->", ":=", "::"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexError {
    pub message: String,
    pub line: usize,
    pub column: usize,
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
    column: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek_at(&self, n: usize) -> Option<char> {
        self.src[self.pos..].chars().nth(n)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }
}

pub fn tokenize(src: &str) -> Result<Vec<Token<'_>>, LexError> {
    let mut cur = Cursor {
        src,
        pos: 0,
        line: 1,
        column: 1,
    };
    let mut tokens = Vec::new();
    while let Some(c) = cur.peek() {
        if c.is_whitespace() {
            cur.bump();
            continue;
        }
        if cur.rest().starts_with("--") {
            while let Some(c) = cur.peek() {
                if c == '\n' {
                    break;
                }
                cur.bump();
            }
            continue;
        }
        if cur.rest().starts_with("/*") {
            let (line, column) = (cur.line, cur.column);
            cur.bump();
            cur.bump();
            loop {
                if cur.rest().starts_with("*/") {
                    cur.bump();
                    cur.bump();
                    break;
                }
                if cur.bump().is_none() {
                    return Err(LexError {
                        message: "unterminated block comment".into(),
                        line,
                        column,
                    });
                }
            }
            continue;
        }

        let (start, line, column) = (cur.pos, cur.line, cur.column);
        let kind = if c.is_ascii_alphabetic() || c == '_' {
            while let Some(c) = cur.peek() {
                if c.is_ascii_alphanumeric() || c == '_' || c == '\'' {
                    cur.bump();
                } else {
                    break;
                }
            }
            TokenKind::Ident
        } else if c.is_ascii_digit() {
            while let Some(c) = cur.peek() {
                let fraction = c == '.' && cur.peek_at(1).is_some_and(|d| d.is_ascii_digit());
                if c.is_ascii_alphanumeric() || fraction {
                    cur.bump();
                } else {
                    break;
                }
            }
            TokenKind::Number
        } else if c == '"' {
            cur.bump();
            loop {
                match cur.bump() {
                    Some('\\') => {
                        cur.bump();
                    }
                    Some('"') => break,
                    Some(_) => {}
                    None => {
                        return Err(LexError {
                            message: "unterminated string literal".into(),
                            line,
                            column,
                        })
                    }
                }
            }
            TokenKind::Str
        } else if c == '\'' && char_literal_len(cur.rest()).is_some() {
            let len = char_literal_len(cur.rest()).unwrap_or(1);
            for _ in 0..len {
                cur.bump();
            }
            TokenKind::Char
        } else {
            let multi = MULTI_SYMBOLS.iter().find(|s| cur.rest().starts_with(**s));
            let n = multi.map_or(1, |s| s.chars().count());
            for _ in 0..n {
                cur.bump();
            }
            TokenKind::Symbol
        };
        tokens.push(Token {
            kind,
            text: &src[start..cur.pos],
            start,
            end: cur.pos,
            line,
            column,
        });
    }
    Ok(tokens)
}

/// Length in chars of a character literal at the start of `s`, if any.
fn char_literal_len(s: &str) -> Option<usize> {
    let chars: Vec<char> = s.chars().take(4).collect();
    match chars.as_slice() {
        ['\'', '\\', _, '\'', ..] => Some(4),
        ['\'', c, '\'', ..] if *c != '\\' => Some(3),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn texts(src: &str) -> Vec<&str> {
        tokenize(src).unwrap().into_iter().map(|t| t.text).collect()
    }

    #[test]
    fn identifiers_with_primes_and_symbols() {
        assert_eq!(
            texts("x' : nat ==> bool"),
            vec!["x'", ":", "nat", "==>", "bool"]
        );
        assert_eq!(
            texts("a:=b==c->d::e"),
            vec!["a", ":=", "b", "==", "c", "->", "d", "::", "e"]
        );
    }

    #[test]
    fn comments_are_skipped() {
        assert_eq!(texts("a -- comment\n/* block\n */ b"), vec!["a", "b"]);
    }

    #[test]
    fn literals() {
        let toks = tokenize(r#""a;b" 'c' '\n' 3.14"#).unwrap();
        let kinds: Vec<_> = toks.iter().map(|t| t.kind).collect();
        assert_eq!(
            kinds,
            vec![
                TokenKind::Str,
                TokenKind::Char,
                TokenKind::Char,
                TokenKind::Number
            ]
        );
    }

    #[test]
    fn positions_are_one_based() {
        let toks = tokenize("a\n  b").unwrap();
        assert_eq!((toks[0].line, toks[0].column), (1, 1));
        assert_eq!((toks[1].line, toks[1].column), (2, 3));
    }

    #[test]
    fn unterminated_string() {
        let err = tokenize("x\n \"abc").unwrap_err();
        assert_eq!((err.line, err.column), (2, 2));
    }
}
