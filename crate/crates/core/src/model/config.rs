/// Class order used when printing diagrams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Ordering {
    #[default]
    InputOrder,
    Alphabetical,
}

/// Translation parameters.
///
/// `gamma0` is the capacity of set, seq and optional types (maps get twice
/// that); `gamma1` is the capacity of product and union types.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub gamma0: u32,
    pub gamma1: u32,
    pub ordering: Ordering,
}

impl Config {
    pub const DEFAULT_GAMMA0: u32 = 2;
    pub const DEFAULT_GAMMA1: u32 = 1;

    pub fn with_capacities(gamma0: u32, gamma1: u32) -> Config {
        Config {
            gamma0,
            gamma1,
            ..Config::default()
        }
    }
}

impl Default for Config {
    fn default() -> Config {
        Config {
            gamma0: Config::DEFAULT_GAMMA0,
            gamma1: Config::DEFAULT_GAMMA1,
            ordering: Ordering::InputOrder,
        }
    }
}
