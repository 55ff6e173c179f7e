#![allow(dead_code)]

pub mod gen;

use std::fs;
use std::path::PathBuf;

use vdmuml::model::Config;
use vdmuml::{parse_puml, parse_vdm, print_puml, uml_to_vdm, vdm_to_uml};

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub const PAIRS: [&str; 15] = [
    "class",
    "attribute",
    "stereotyped_attributes",
    "operation",
    "function",
    "access",
    "static_member",
    "inheritance",
    "association",
    "set_association",
    "seq_association",
    "optional_association",
    "qualified",
    "unique_qualified",
    "qualified_seq",
];

pub struct GoldenPair {
    pub name: &'static str,
    pub vdm: String,
    pub puml: String,
}

pub fn golden_pairs() -> Vec<GoldenPair> {
    let dir = fixtures().join("golden");
    PAIRS
        .iter()
        .map(|name| GoldenPair {
            name,
            vdm: fs::read_to_string(dir.join(format!("{name}.vdmpp"))).unwrap(),
            puml: fs::read_to_string(dir.join(format!("{name}.puml"))).unwrap(),
        })
        .collect()
}

/// VDM side to UML: compared as canonical printed diagrams.
pub fn check_forward(pair: &GoldenPair) -> Result<(), String> {
    let cfg = Config::default();
    let vdm = parse_vdm(&pair.vdm, pair.name).map_err(|e| format!("{e:?}"))?;
    let want = parse_puml(&pair.puml).map_err(|e| format!("{e:?}"))?;
    let got = print_puml(&vdm_to_uml(&vdm, &cfg).canonicalize(), &cfg);
    let want = print_puml(&want.canonicalize(), &cfg);
    if got == want {
        Ok(())
    } else {
        Err(format!("expected\n{want}\ngot\n{got}"))
    }
}

/// UML side to VDM: compared as canonical skeletons.
pub fn check_backward(pair: &GoldenPair) -> Result<(), String> {
    let uml = parse_puml(&pair.puml).map_err(|e| format!("{e:?}"))?;
    let got = uml_to_vdm(&uml)
        .map_err(|e| format!("{e:?}"))?
        .canonicalize();
    let want = parse_vdm(&pair.vdm, pair.name)
        .map_err(|e| format!("{e:?}"))?
        .canonicalize();
    if got == want {
        Ok(())
    } else {
        Err(format!("expected\n{want:#?}\ngot\n{got:#?}"))
    }
}
