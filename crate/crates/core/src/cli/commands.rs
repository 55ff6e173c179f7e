use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::{Path, PathBuf};

use super::inputs::{load_vdm, read, LoadedVdm};
use super::report::{RunReport, EXIT_FAILURE, EXIT_IO, EXIT_OK};
use crate::error::SourceSpan;
use crate::model::{validate_model, validate_uml, Config, Diagnostic, UmlModel, VdmModel};
use crate::puml::{parse_puml, parse_puml_located, print_puml, PumlIndex};
use crate::transform::{translate_vdm, uml_to_vdm, TranslationError};
use crate::vdm::print_class;

/// Parses and validates the inputs, then writes one diagram.
pub fn cmd_vdm2uml(inputs: &[PathBuf], output: Option<&Path>, config: &Config) -> RunReport {
    let mut report = RunReport::default();
    let loaded = match load_checked_vdm(inputs, &mut report) {
        Ok(l) => l,
        Err(code) => return report.finish(code),
    };
    let translated = translate_vdm(&loaded.model, config);
    let text = print_puml(&translated.model, config) + "\n";
    let out = output
        .map(Path::to_path_buf)
        .unwrap_or_else(|| default_puml_path(inputs));
    if let Err(code) = write(&out, &text, &mut report) {
        return report.finish(code);
    }
    for (class, member) in &translated.abstracted {
        report.say(format!("abstracted {class}.{member}"));
    }
    report.say(format!(
        "wrote {}: {} classes, {} associations, {} abstracted attributes",
        out.display(),
        translated.model.classes.len(),
        translated.model.associations.len(),
        translated.abstracted.len()
    ));
    report.finish(EXIT_OK)
}

/// Writes one skeleton `.vdmpp` per diagram class. Nothing is written
/// unless the whole diagram translates.
pub fn cmd_uml2vdm(input: &Path, output_dir: Option<&Path>) -> RunReport {
    let mut report = RunReport::default();
    let (uml, index) = match load_checked_uml(input, &mut report) {
        Ok(x) => x,
        Err(code) => return report.finish(code),
    };
    let vdm = match uml_to_vdm(&uml) {
        Ok(v) => v,
        Err(errors) => {
            for e in errors {
                report.diag(locate_translation_error(input, &index, &e));
            }
            return report.finish(EXIT_FAILURE);
        }
    };
    let dir = output_dir
        .map(Path::to_path_buf)
        .unwrap_or_else(|| parent_dir(input));
    if let Err(e) = fs::create_dir_all(&dir) {
        report.diag(format!(
            "{}: error: cannot create directory: {e}",
            dir.display()
        ));
        return report.finish(EXIT_IO);
    }
    for class in &vdm.classes {
        let path = dir.join(format!("{}.vdmpp", class.name));
        if let Err(code) = write(&path, &(print_class(class) + "\n"), &mut report) {
            return report.finish(code);
        }
    }
    report.say(format!(
        "wrote {} classes to {}",
        vdm.classes.len(),
        dir.display()
    ));
    report.finish(EXIT_OK)
}

/// Runs VDM to UML to VDM through the printed diagram text and compares
/// each class with its canonical form.
pub fn cmd_roundtrip(inputs: &[PathBuf], config: &Config) -> RunReport {
    let mut report = RunReport::default();
    let loaded = match load_vdm(inputs, &mut report) {
        Ok(l) => l,
        Err(_) => return report.finish(EXIT_IO),
    };
    if report_model_diagnostics(&loaded, &mut report) {
        return report.finish(EXIT_FAILURE);
    }
    let uml = translate_vdm(&loaded.model, config).model;
    let text = print_puml(&uml, config);
    let reparsed = match parse_puml(&text) {
        Ok(m) => m,
        Err(errors) => {
            for e in errors {
                report.diag(format!(
                    "{}: error: generated diagram rejected: {e}",
                    loaded.first_file.display()
                ));
            }
            return report.finish(EXIT_FAILURE);
        }
    };

    let (back, lossy) = translate_back_lenient(&reparsed);
    let original = loaded.model.canonicalize();
    let back = back.canonicalize();
    let mut failures = 0;
    for (class, span) in loaded.model.classes.iter().zip(&loaded.spans) {
        let want = original
            .class(&class.name)
            .map(print_class)
            .unwrap_or_default();
        let got = back.class(&class.name).map(print_class).unwrap_or_default();
        let mut notes: Vec<String> = lossy
            .iter()
            .filter(|e| e.class == class.name)
            .map(|e| format!("{}: {}", e.member, e.message))
            .collect();
        if want != got {
            notes.extend(line_diff(&want, &got));
        }
        if notes.is_empty() {
            report.say(format!("PASS {}", class.name));
        } else {
            failures += 1;
            report.say(format!("FAIL {}", class.name));
            for n in &notes {
                report.say(format!("  {n}"));
            }
            report.diag(format!(
                "{span}: error: class {} does not survive the round trip",
                class.name
            ));
        }
    }
    report.say(format!(
        "{} of {} classes passed",
        loaded.model.classes.len() - failures,
        loaded.model.classes.len()
    ));
    report.finish(if failures == 0 { EXIT_OK } else { EXIT_FAILURE })
}

/// Parses and validates without writing anything. `.puml` inputs are
/// checked as diagrams, everything else as VDM.
pub fn cmd_check(input: &Path) -> RunReport {
    let mut report = RunReport::default();
    if input.is_file() && input.extension().is_some_and(|x| x == "puml") {
        return match load_checked_uml(input, &mut report) {
            Ok((uml, _)) => {
                report.say(format!(
                    "{}: ok, {} classes",
                    input.display(),
                    uml.classes.len()
                ));
                report.finish(EXIT_OK)
            }
            Err(code) => report.finish(code),
        };
    }
    match load_checked_vdm(&[input.to_path_buf()], &mut report) {
        Ok(l) => {
            report.say(format!(
                "{}: ok, {} classes",
                input.display(),
                l.model.classes.len()
            ));
            report.finish(EXIT_OK)
        }
        Err(code) => report.finish(code),
    }
}

fn load_checked_vdm(inputs: &[PathBuf], report: &mut RunReport) -> Result<LoadedVdm, i32> {
    let loaded = load_vdm(inputs, report)?;
    if report_model_diagnostics(&loaded, report) {
        return Err(EXIT_FAILURE);
    }
    Ok(loaded)
}

/// Returns true when any diagnostic is an error.
fn report_model_diagnostics(loaded: &LoadedVdm, report: &mut RunReport) -> bool {
    let diags = validate_model(&loaded.model);
    for d in &diags {
        report.diag(loaded.locate(d));
    }
    diags.iter().any(Diagnostic::is_error)
}

fn load_checked_uml(input: &Path, report: &mut RunReport) -> Result<(UmlModel, PumlIndex), i32> {
    let text = read(input, report)?;
    let (uml, index) =
        parse_puml_located(&text, &input.display().to_string()).map_err(|errors| {
            for e in errors {
                report.diag(e.to_string());
            }
            EXIT_FAILURE
        })?;
    let diags = validate_uml(&uml);
    for d in &diags {
        let line = uml_line(&uml, &index, d);
        report.diag(format!(
            "{}: {d}",
            SourceSpan::new(input.display().to_string(), line, 1)
        ));
    }
    if diags.iter().any(Diagnostic::is_error) {
        return Err(EXIT_FAILURE);
    }
    Ok((uml, index))
}

/// Association and generalization findings point at their arrow line,
/// everything else at the class header.
fn uml_line(uml: &UmlModel, index: &PumlIndex, d: &Diagnostic) -> usize {
    use crate::model::DiagnosticKind as K;
    let Some(class) = &d.class else { return 1 };
    let assoc = uml.associations.iter().position(|a| {
        &a.source == class
            && d.member
                .as_ref()
                .map_or(d.kind == K::MissingRole, |m| &a.role_name == m)
    });
    let generalization = matches!(
        d.kind,
        K::SelfInheritance | K::UnresolvedEndpoint | K::DuplicateGeneralization
    )
    .then(|| uml.generalizations.iter().rposition(|g| &g.child == class))
    .flatten();
    assoc
        .and_then(|i| index.association_lines.get(i))
        .or_else(|| generalization.and_then(|i| index.generalization_lines.get(i)))
        .or_else(|| index.class_lines.get(class))
        .copied()
        .unwrap_or(1)
}

fn locate_translation_error(input: &Path, index: &PumlIndex, e: &TranslationError) -> String {
    let line = index.class_lines.get(&e.class).copied().unwrap_or(1);
    format!(
        "{}: error: {e}",
        SourceSpan::new(input.display().to_string(), line, 1)
    )
}

/// Translates back, dropping members that cannot be translated and
/// returning their errors alongside.
fn translate_back_lenient(uml: &UmlModel) -> (VdmModel, Vec<TranslationError>) {
    match uml_to_vdm(uml) {
        Ok(m) => (m, Vec::new()),
        Err(errors) => {
            let bad: BTreeSet<(&str, &str)> = errors
                .iter()
                .map(|e| (e.class.as_str(), e.member.as_str()))
                .collect();
            let mut pruned = uml.clone();
            for c in &mut pruned.classes {
                c.attributes
                    .retain(|a| !bad.contains(&(c.name.as_str(), a.name.as_str())));
                c.operations
                    .retain(|o| !bad.contains(&(c.name.as_str(), o.name.as_str())));
            }
            pruned
                .associations
                .retain(|a| !bad.contains(&(a.source.as_str(), a.role_name.as_str())));
            let model = uml_to_vdm(&pruned).unwrap_or_default();
            (model, errors)
        }
    }
}

/// Lines only in `want` are prefixed `-`, lines only in `got` `+`.
fn line_diff(want: &str, got: &str) -> Vec<String> {
    let count = |s: &str| {
        let mut m: BTreeMap<String, i64> = BTreeMap::new();
        for l in s.lines() {
            *m.entry(l.to_string()).or_default() += 1;
        }
        m
    };
    let (w, g) = (count(want), count(got));
    let mut out = Vec::new();
    for l in want.lines() {
        if w[l] > g.get(l).copied().unwrap_or(0) && !out.contains(&format!("- {l}")) {
            out.push(format!("- {l}"));
        }
    }
    for l in got.lines() {
        if g[l] > w.get(l).copied().unwrap_or(0) && !out.contains(&format!("+ {l}")) {
            out.push(format!("+ {l}"));
        }
    }
    out
}

fn write(path: &Path, contents: &str, report: &mut RunReport) -> Result<(), i32> {
    match fs::write(path, contents) {
        Ok(()) => {
            report.files_written.push(path.to_path_buf());
            Ok(())
        }
        Err(e) => {
            report.diag(format!("{}: error: cannot write: {e}", path.display()));
            Err(EXIT_IO)
        }
    }
}

fn parent_dir(p: &Path) -> PathBuf {
    match p.parent() {
        Some(d) if !d.as_os_str().is_empty() => d.to_path_buf(),
        _ => PathBuf::from("."),
    }
}

fn dir_name(dir: &Path) -> String {
    dir.canonicalize()
        .ok()
        .and_then(|p| p.file_name().map(|n| n.to_string_lossy().into_owned()))
        .unwrap_or_else(|| "workspace".to_string())
}

/// A single file becomes `file.puml` next to it; a directory `d` becomes
/// `d/d.puml`; several inputs go next to the first one, named after its
/// directory.
pub fn default_puml_path(inputs: &[PathBuf]) -> PathBuf {
    match inputs {
        [one] if one.is_dir() => one.join(format!("{}.puml", dir_name(one))),
        [one] => one.with_extension("puml"),
        _ => {
            let dir = parent_dir(&inputs[0]);
            let name = dir_name(&dir);
            dir.join(format!("{name}.puml"))
        }
    }
}
