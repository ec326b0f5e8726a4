use std::path::{Path, PathBuf};

use rubin_core::error::{Error, Result};
use rubin_core::homeo::{parse_map_file, PrefixMap};
use rubin_core::rubin::GeneratorSet;

/// Name resolution for elements: built-ins, file definitions, inline tables.
pub struct Registry {
    named: Vec<(String, PrefixMap)>,
}

impl Registry {
    /// Built-ins plus the definitions from the given files. Later files
    /// shadow earlier ones and built-ins.
    pub fn load(files: &[PathBuf]) -> Result<Registry> {
        let mut named: Vec<(String, PrefixMap)> = vec![
            ("id".into(), PrefixMap::identity()),
            ("flip".into(), PrefixMap::first_digit_flip()),
        ];
        named.extend(GeneratorSet::v_standard().entries().iter().cloned());
        named.extend(GeneratorSet::spine_swaps().entries().iter().cloned());
        for path in files {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
                line: 0,
                msg: format!("cannot read {}: {e}", path.display()),
            })?;
            for (name, map) in parse_map_file(&text)? {
                named.retain(|(n, _)| *n != name);
                named.push((name, map));
            }
        }
        Ok(Registry { named })
    }

    /// An element given by name or as an inline table (`{...}` or `id`).
    pub fn element(&self, spec: &str) -> Result<PrefixMap> {
        let spec = spec.trim();
        if spec.starts_with('{') || spec == "id" {
            return spec.parse();
        }
        self.named
            .iter()
            .rev()
            .find(|(n, _)| n == spec)
            .map(|(_, m)| m.clone())
            .ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("unknown element {spec:?}; use a name or an inline table"),
            })
    }

    /// A generator family: a bundled name or a definition-file path.
    pub fn generator_set(&self, spec: &str) -> Result<GeneratorSet> {
        match spec {
            "v-standard" => Ok(GeneratorSet::v_standard().clone()),
            "spine-swaps" => Ok(GeneratorSet::spine_swaps().clone()),
            path => {
                if !Path::new(path).exists() {
                    return Err(Error::Parse {
                        line: 0,
                        msg: format!(
                            "unknown generator family {path:?}; use v-standard, spine-swaps, \
                             or a map-file path"
                        ),
                    });
                }
                let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
                    line: 0,
                    msg: format!("cannot read {path}: {e}"),
                })?;
                GeneratorSet::from_file_text(&text)
            }
        }
    }
}
