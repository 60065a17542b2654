//! Reproducibility manifests written next to every output file.
//!
//! A manifest records the tool version, the subcommand, every resolved
//! configuration value, the SHA-256 digest of each input, and the paths of
//! all outputs. It deliberately contains no timestamps or host details, so
//! rerunning a command bit-reproduces the manifest along with the outputs.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use linkprox::Result;
use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Serialize)]
struct InputDigest {
    path: String,
    sha256: String,
}

#[derive(Serialize)]
pub struct RunManifest {
    tool: &'static str,
    version: &'static str,
    command: &'static str,
    args: BTreeMap<String, String>,
    inputs: Vec<InputDigest>,
    outputs: Vec<String>,
}

impl RunManifest {
    pub fn new(command: &'static str) -> Self {
        RunManifest {
            tool: "linkprox",
            version: env!("CARGO_PKG_VERSION"),
            command,
            args: BTreeMap::new(),
            inputs: Vec::new(),
            outputs: Vec::new(),
        }
    }

    /// Records one resolved configuration value under its flag name.
    pub fn arg(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.args.insert(key.to_string(), value.to_string());
        self
    }

    /// Records an input file along with its content digest.
    pub fn input(&mut self, path: &Path) -> Result<&mut Self> {
        let bytes = fs::read(path)?;
        let digest = Sha256::digest(&bytes);
        let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        self.inputs.push(InputDigest {
            path: path.display().to_string(),
            sha256: hex,
        });
        Ok(self)
    }

    pub fn output(&mut self, path: &Path) -> &mut Self {
        self.outputs.push(path.display().to_string());
        self
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        let mut json = serde_json::to_string_pretty(self)
            .map_err(|e| linkprox::Error::Io(std::io::Error::other(e)))?;
        json.push('\n');
        fs::write(path, json)?;
        Ok(())
    }
}

/// Manifest path for a single-file output: the file name plus
/// `.manifest.json`.
pub fn manifest_path(out: &Path) -> PathBuf {
    let name = out
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| "out".to_string());
    out.with_file_name(format!("{name}.manifest.json"))
}
