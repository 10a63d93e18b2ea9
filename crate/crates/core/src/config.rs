//! Modulus overrides read from a TOML file.
//!
//! ```toml
//! [moduli]
//! 6 = "43"        # x^6 + x + 1, keyed by m
//! 10 = "0x409"
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::field::FieldCtx;

#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    #[serde(default)]
    moduli: BTreeMap<String, String>,
}

/// Parse a modulus written as hex, with or without `0x`.
pub fn parse_modulus(text: &str) -> Result<u64> {
    let t = text.trim();
    let t = t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")).unwrap_or(t);
    u64::from_str_radix(t, 16).map_err(|_| Error::Config(format!("bad hex modulus `{text}`")))
}

impl Config {
    pub fn parse(text: &str) -> Result<Self> {
        let cfg: Config = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        for (m, value) in &cfg.moduli {
            m.parse::<u32>().map_err(|_| Error::Config(format!("degree key `{m}` is not an integer")))?;
            parse_modulus(value)?;
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Override for extension degree m, if any.
    pub fn modulus(&self, m: u32) -> Option<u64> {
        self.moduli
            .iter()
            .find(|(key, _)| key.parse::<u32>() == Ok(m))
            .map(|(_, v)| parse_modulus(v).unwrap())
    }

    /// Field for subfield degree k with the configured modulus, if any.
    pub fn field(&self, k: u32) -> Result<FieldCtx> {
        FieldCtx::new(k, self.modulus(2 * k))
    }
}
