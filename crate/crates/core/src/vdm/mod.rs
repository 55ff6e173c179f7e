//! VDM++ front end: parser and printer for the supported subset.

mod lexer;
mod parser;
mod printer;
mod types;

pub(crate) use lexer::{tokenize, TokenKind};
pub use parser::{parse_vdm, parse_vdm_located};
pub use printer::{print_class, print_vdm, SKELETON_BODY, UNDEFINED_VALUE};
pub use types::{parse_vdm_type, render_type};

const RESERVED: &[&str] = &[
    "abs",
    "all",
    "always",
    "and",
    "atomic",
    "be",
    "bool",
    "by",
    "card",
    "cases",
    "char",
    "class",
    "comp",
    "compose",
    "conc",
    "dcl",
    "def",
    "dinter",
    "div",
    "do",
    "dom",
    "dunion",
    "elems",
    "else",
    "elseif",
    "end",
    "eq",
    "error",
    "errs",
    "exists",
    "exists1",
    "exit",
    "ext",
    "false",
    "floor",
    "for",
    "forall",
    "from",
    "functions",
    "hd",
    "if",
    "in",
    "inds",
    "inmap",
    "instance",
    "int",
    "inter",
    "inv",
    "inverse",
    "iota",
    "is",
    "isofbaseclass",
    "isofclass",
    "lambda",
    "len",
    "let",
    "map",
    "measure",
    "merge",
    "mod",
    "mu",
    "munion",
    "mutex",
    "nat",
    "nat1",
    "new",
    "nil",
    "not",
    "of",
    "operations",
    "or",
    "ord",
    "others",
    "per",
    "post",
    "power",
    "pre",
    "private",
    "protected",
    "psubset",
    "public",
    "pure",
    "rat",
    "rd",
    "real",
    "rem",
    "responsibility",
    "return",
    "reverse",
    "rng",
    "samebaseclass",
    "sameclass",
    "self",
    "seq",
    "seq1",
    "set",
    "set1",
    "skip",
    "specified",
    "st",
    "start",
    "startlist",
    "static",
    "stop",
    "stoplist",
    "subclass",
    "subset",
    "sync",
    "then",
    "thread",
    "threadid",
    "tixe",
    "tl",
    "to",
    "token",
    "traces",
    "trap",
    "true",
    "types",
    "undefined",
    "union",
    "values",
    "variables",
    "while",
    "with",
    "wr",
    "yet",
];

/// True for VDM++ keywords, which cannot be used as names.
pub fn is_reserved(word: &str) -> bool {
    RESERVED.binary_search(&word).is_ok()
}
