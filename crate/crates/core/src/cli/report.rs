use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_IO: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

/// What a command did. `output` goes to stdout, `diagnostics` to stderr.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunReport {
    pub files_read: Vec<PathBuf>,
    pub files_written: Vec<PathBuf>,
    pub diagnostics: Vec<String>,
    pub output: Vec<String>,
    pub exit_code: i32,
}

impl RunReport {
    pub fn has_errors(&self) -> bool {
        self.diagnostics.iter().any(|d| d.contains(": error: "))
    }

    pub(crate) fn diag(&mut self, line: impl Into<String>) {
        self.diagnostics.push(line.into());
    }

    pub(crate) fn say(&mut self, line: impl Into<String>) {
        self.output.push(line.into());
    }

    pub(crate) fn finish(mut self, code: i32) -> RunReport {
        self.exit_code = code;
        self
    }
}
