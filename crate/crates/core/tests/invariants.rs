mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::gen::{uml_complete_vdm, vdm_type};
use vdmuml::model::{Access, Config, VdmType};
use vdmuml::transform::{classify_instance_variable, is_abstracted};
use vdmuml::vdm::render_type;
use vdmuml::vdm_to_uml;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn member_counts_preserved(seed in any::<u64>()) {
        let cfg = Config::default();
        let m = uml_complete_vdm(&mut rng(seed), &cfg);
        let u = vdm_to_uml(&m, &cfg);
        prop_assert_eq!(u.classes.len(), m.classes.len());
        for (vc, uc) in m.classes.iter().zip(&u.classes) {
            let outgoing = u.associations.iter().filter(|a| a.source == vc.name).count();
            prop_assert_eq!(
                uc.attributes.len() + outgoing,
                vc.instance_variables.len() + vc.values.len() + vc.type_defs.len()
            );
            prop_assert_eq!(uc.operations.len(), vc.operations.len() + vc.functions.len());
        }
    }

    #[test]
    fn access_and_static_carry_over(seed in any::<u64>()) {
        let cfg = Config::default();
        let m = uml_complete_vdm(&mut rng(seed), &cfg);
        let u = vdm_to_uml(&m, &cfg);
        for (vc, uc) in m.classes.iter().zip(&u.classes) {
            for iv in &vc.instance_variables {
                let (access, is_static) = match uc.attributes.iter().find(|a| a.name == iv.name) {
                    Some(a) => (a.visibility, a.is_static),
                    None => {
                        let a = u.associations.iter().find(|a| a.source == vc.name && a.role_name == iv.name).unwrap();
                        (a.role_visibility, false)
                    }
                };
                prop_assert_eq!((access, is_static), (iv.access, iv.is_static));
            }
            for op in vc.operations.iter().chain(&vc.functions) {
                let o = uc.operations.iter().find(|o| o.name == op.name).unwrap();
                prop_assert_eq!((o.visibility, o.is_static), (op.access, op.is_static));
            }
        }
    }

    #[test]
    fn abstraction_is_monotone(seed in any::<u64>(), g0 in 0u32..6, g1 in 0u32..6, d0 in 0u32..6, d1 in 0u32..6) {
        let t = vdm_type(&mut rng(seed), &["A".to_string()], 4);
        let hi = Config::with_capacities(g0, g1);
        let lo = Config::with_capacities(g0.saturating_sub(d0), g1.saturating_sub(d1));
        if is_abstracted(&t, &hi) {
            prop_assert!(is_abstracted(&t, &lo));
        }
    }

    #[test]
    fn classification_ignores_names_and_access(seed in any::<u64>()) {
        let classes: Vec<String> = vec!["A".into(), "B".into()];
        let set: BTreeSet<String> = classes.iter().cloned().collect();
        let t = vdm_type(&mut rng(seed), &classes, 3);
        let plan = classify_instance_variable(&t, &set);
        let reparsed: VdmType = vdmuml::vdm::parse_vdm_type(&render_type(&t)).unwrap();
        prop_assert_eq!(classify_instance_variable(&reparsed, &set), plan.clone());
        let cfg = Config::default();
        let mut plans = Vec::new();
        for access in [Access::Private, Access::Public] {
            for name in ["x", "other"] {
                let src = format!("class A\ninstance variables\n{access} {name} : {};\nend A\nclass B\nend B", render_type(&t));
                let m = vdmuml::parse_vdm(&src, "t").unwrap();
                let u = vdm_to_uml(&m, &cfg);
                plans.push(u.associations.first().map(|a| (a.target.clone(), a.multiplicity, a.qualifier.clone())));
            }
        }
        prop_assert!(plans.windows(2).all(|w| w[0] == w[1]));
    }
}
