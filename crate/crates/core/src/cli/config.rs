use crate::model::{Config, Ordering};

pub const ENV_GAMMA0: &str = "VDMUML_GAMMA0";
pub const ENV_GAMMA1: &str = "VDMUML_GAMMA1";

/// Raw configuration flags as typed on the command line.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConfigFlags {
    pub gamma0: Option<String>,
    pub gamma1: Option<String>,
    pub ordering: Option<Ordering>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct UsageError(pub String);

/// Flags win over the environment, which wins over the defaults.
pub fn load_config<E>(flags: &ConfigFlags, env: E) -> Result<Config, UsageError>
where
    E: Fn(&str) -> Option<String>,
{
    let gamma =
        |flag: &Option<String>, name: &str, var: &str, default: u32| -> Result<u32, UsageError> {
            if let Some(v) = flag {
                return parse_capacity(v).ok_or_else(|| {
                    UsageError(format!(
                        "invalid value '{v}' for --{name}: expected a non-negative integer"
                    ))
                });
            }
            match env(var) {
                Some(v) => parse_capacity(&v).ok_or_else(|| {
                    UsageError(format!(
                        "invalid value '{v}' in {var}: expected a non-negative integer"
                    ))
                }),
                None => Ok(default),
            }
        };
    Ok(Config {
        gamma0: gamma(&flags.gamma0, "gamma0", ENV_GAMMA0, Config::DEFAULT_GAMMA0)?,
        gamma1: gamma(&flags.gamma1, "gamma1", ENV_GAMMA1, Config::DEFAULT_GAMMA1)?,
        ordering: flags.ordering.unwrap_or_default(),
    })
}

fn parse_capacity(s: &str) -> Option<u32> {
    let s = s.trim();
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn no_env(_: &str) -> Option<String> {
        None
    }

    #[test]
    fn defaults() {
        let c = load_config(&ConfigFlags::default(), no_env).unwrap();
        assert_eq!((c.gamma0, c.gamma1), (2, 1));
        assert_eq!(c.ordering, Ordering::InputOrder);
    }

    #[test]
    fn flag_beats_env() {
        let flags = ConfigFlags {
            gamma0: Some("5".into()),
            ..Default::default()
        };
        let env = |k: &str| (k == ENV_GAMMA0).then(|| "3".to_string());
        assert_eq!(load_config(&flags, env).unwrap().gamma0, 5);
        assert_eq!(load_config(&ConfigFlags::default(), env).unwrap().gamma0, 3);
    }

    #[test]
    fn rejects_negative_and_garbage() {
        for bad in ["-1", "1.5", "x", "", "+2"] {
            let flags = ConfigFlags {
                gamma1: Some(bad.into()),
                ..Default::default()
            };
            assert!(load_config(&flags, no_env).is_err(), "{bad}");
        }
        let env = |k: &str| (k == ENV_GAMMA1).then(|| "-4".to_string());
        assert!(load_config(&ConfigFlags::default(), env).is_err());
    }

    #[test]
    fn zero_is_allowed() {
        let flags = ConfigFlags {
            gamma0: Some("0".into()),
            gamma1: Some("0".into()),
            ordering: Some(Ordering::Alphabetical),
        };
        let c = load_config(&flags, no_env).unwrap();
        assert_eq!(
            (c.gamma0, c.gamma1, c.ordering),
            (0, 0, Ordering::Alphabetical)
        );
    }
}
