//! Session configuration and input loading.

use std::fs;
use std::path::{Path, PathBuf};

use algebroid::finite_dual::URep;
use algebroid::lie_rinehart::json_pointer;
use algebroid::{AlgebraError, Envelope, Fixture, LRPresentation};
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("{path}: {source}")]
    Document { path: String, source: AlgebraError },
    #[error("{0}")]
    Algebra(#[from] AlgebraError),
}

/// `{"presentation": path, "representations": [path, ...], "precision": n}`; relative paths
/// resolve against the directory of the config file.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SessionDoc {
    presentation: String,
    #[serde(default)]
    representations: Vec<String>,
    #[serde(default)]
    precision: Option<u32>,
}

#[derive(Debug)]
pub struct SessionConfig {
    pub presentation: LRPresentation,
    pub representation_paths: Vec<PathBuf>,
    pub representation_texts: Vec<String>,
    pub precision: Option<u32>,
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })
}

pub fn load_presentation(path: &Path) -> Result<LRPresentation, CliError> {
    let text = read_file(path)?;
    LRPresentation::from_json(&text).map_err(|source| CliError::Document { path: path.display().to_string(), source })
}

pub fn load_session(path: &Path) -> Result<SessionConfig, CliError> {
    let text = read_file(path)?;
    let shown = path.display().to_string();
    let de = &mut serde_json::Deserializer::from_str(&text);
    let doc: SessionDoc = serde_path_to_error::deserialize(de).map_err(|e| CliError::Document {
        path: shown.clone(),
        source: AlgebraError::Schema { path: json_pointer(&e.path().to_string()), message: e.inner().to_string() },
    })?;
    let base = path.parent().unwrap_or(Path::new("."));
    let presentation = load_presentation(&base.join(&doc.presentation))?;
    let mut representation_paths = Vec::new();
    let mut representation_texts = Vec::new();
    for (i, rep) in doc.representations.iter().enumerate() {
        let rep_path = base.join(rep);
        let text = fs::read_to_string(&rep_path).map_err(|e| CliError::Document {
            path: shown.clone(),
            source: AlgebraError::Schema {
                path: format!("/representations/{i}"),
                message: format!("cannot read {}: {e}", rep_path.display()),
            },
        })?;
        representation_paths.push(rep_path);
        representation_texts.push(text);
    }
    Ok(SessionConfig { presentation, representation_paths, representation_texts, precision: doc.precision })
}

/// Where the presentation comes from.
pub struct Source {
    pub fixture: Option<Fixture>,
    pub presentation: Option<PathBuf>,
    pub config: Option<PathBuf>,
}

pub struct Loaded {
    pub env: Envelope,
    pub reps: Vec<(PathBuf, String)>,
    pub precision: Option<u32>,
}

impl Source {
    pub fn load(&self) -> Result<Loaded, CliError> {
        match (&self.fixture, &self.presentation, &self.config) {
            (Some(f), None, None) => Ok(Loaded { env: Envelope::new(f.presentation()), reps: Vec::new(), precision: None }),
            (None, Some(p), None) => Ok(Loaded { env: Envelope::new(load_presentation(p)?), reps: Vec::new(), precision: None }),
            (None, None, Some(c)) => {
                let s = load_session(c)?;
                Ok(Loaded {
                    env: Envelope::new(s.presentation),
                    reps: s.representation_paths.into_iter().zip(s.representation_texts).collect(),
                    precision: s.precision,
                })
            }
            (None, None, None) => Err(CliError::Usage("one of --fixture, --presentation or --config is required".into())),
            _ => Err(CliError::Usage("--fixture, --presentation and --config are mutually exclusive".into())),
        }
    }
}

pub fn load_rep(env: &Envelope, path: &Path, text: &str) -> Result<URep, CliError> {
    URep::from_json(env, text).map_err(|source| CliError::Document { path: path.display().to_string(), source })
}
