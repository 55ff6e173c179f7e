use std::fs;
use std::path::{Path, PathBuf};

use walkdir::WalkDir;

use super::report::{RunReport, EXIT_FAILURE, EXIT_IO};
use crate::error::SourceSpan;
use crate::model::{Diagnostic, VdmModel};
use crate::vdm::parse_vdm_located;

pub(crate) struct LoadedVdm {
    pub model: VdmModel,
    /// Header span of each class, parallel to `model.classes`.
    pub spans: Vec<SourceSpan>,
    pub first_file: PathBuf,
}

/// Expands directories into the `.vdmpp` files below them, sorted.
/// Explicitly named files are taken as they are.
pub(crate) fn collect_vdm_files(
    inputs: &[PathBuf],
    report: &mut RunReport,
) -> Result<Vec<PathBuf>, i32> {
    let mut files = Vec::new();
    for input in inputs {
        if input.is_dir() {
            let mut found = Vec::new();
            for entry in WalkDir::new(input) {
                let entry = entry.map_err(|e| {
                    report.diag(format!("{}: error: {e}", input.display()));
                    EXIT_IO
                })?;
                let p = entry.path();
                if entry.file_type().is_file() && p.extension().is_some_and(|x| x == "vdmpp") {
                    found.push(p.to_path_buf());
                }
            }
            found.sort();
            files.extend(found);
        } else if input.is_file() {
            files.push(input.clone());
        } else {
            report.diag(format!(
                "{}: error: no such file or directory",
                input.display()
            ));
            return Err(EXIT_IO);
        }
    }
    if files.is_empty() {
        report.diag(format!(
            "{}: error: no .vdmpp files found",
            display_list(inputs)
        ));
        return Err(EXIT_FAILURE);
    }
    Ok(files)
}

fn display_list(paths: &[PathBuf]) -> String {
    paths
        .iter()
        .map(|p| p.display().to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

pub(crate) fn read(path: &Path, report: &mut RunReport) -> Result<String, i32> {
    match fs::read_to_string(path) {
        Ok(s) => {
            report.files_read.push(path.to_path_buf());
            Ok(s)
        }
        Err(e) => {
            report.diag(format!("{}: error: cannot read: {e}", path.display()));
            Err(EXIT_IO)
        }
    }
}

/// Parses all files into one model. Every file is parsed even after a
/// failure so all syntax errors are reported together.
pub(crate) fn load_vdm(inputs: &[PathBuf], report: &mut RunReport) -> Result<LoadedVdm, i32> {
    let files = collect_vdm_files(inputs, report)?;
    let mut model = VdmModel::default();
    let mut spans = Vec::new();
    let mut failed = false;
    for file in &files {
        let source = read(file, report)?;
        match parse_vdm_located(&source, &file.display().to_string()) {
            Ok((m, s)) => {
                model.classes.extend(m.classes);
                spans.extend(s);
            }
            Err(errors) => {
                failed = true;
                for e in errors {
                    report.diag(e.to_string());
                }
            }
        }
    }
    if failed {
        return Err(EXIT_FAILURE);
    }
    Ok(LoadedVdm {
        model,
        spans,
        first_file: files[0].clone(),
    })
}

impl LoadedVdm {
    /// Formats a model diagnostic at the header of the class it names. For
    /// duplicated names the last declaration is used.
    pub fn locate(&self, d: &Diagnostic) -> String {
        let span = d
            .class
            .as_ref()
            .and_then(|c| {
                self.model
                    .classes
                    .iter()
                    .zip(&self.spans)
                    .rev()
                    .find(|(k, _)| &k.name == c)
                    .map(|(_, s)| s.clone())
            })
            .unwrap_or_else(|| SourceSpan::new(self.first_file.display().to_string(), 1, 1));
        format!("{span}: {d}")
    }
}
