//! Reading and writing complexes and configurations as JSON files.
//!
//! A complex file is `{"name": "...", "facets": [[v, ...], ...]}` with vertices
//! given as integers or strings. The canonical form written back has the
//! facets reduced to an antichain and sorted, on a single line.

use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use thiserror::Error;

use crate::additivity::SurfaceConfiguration;
use crate::catalog::LocalPiece;
use crate::simplicial::{ComplexError, ComplexFile, Simplex, SimplicialComplex};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{}: {cause}", path.display())]
    Read { path: PathBuf, cause: std::io::Error },
    #[error("{}: {cause}", path.display())]
    Write { path: PathBuf, cause: std::io::Error },
    /// Malformed JSON or a schema mismatch; the message carries line and
    /// column.
    #[error("{}: {cause}", path.display())]
    Json { path: PathBuf, cause: serde_json::Error },
    #[error("{}: facet #{index} {facet}: {cause}", path.display())]
    Facet {
        path: PathBuf,
        index: usize,
        facet: String,
        cause: ComplexError,
    },
}

fn read(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|cause| IoError::Read {
        path: path.to_owned(),
        cause,
    })
}

fn parse_json<T: DeserializeOwned>(text: &str, path: &Path) -> Result<T, IoError> {
    serde_json::from_str(text).map_err(|cause| IoError::Json {
        path: path.to_owned(),
        cause,
    })
}

/// Parses complex JSON; `origin` only labels diagnostics.
pub fn parse_complex_str(text: &str, origin: &Path) -> Result<SimplicialComplex, IoError> {
    let file: ComplexFile = parse_json(text, origin)?;
    for (index, facet) in file.facets.iter().enumerate() {
        if let Err(cause) = Simplex::new(facet.iter().cloned()) {
            let shown: Vec<String> = facet
                .iter()
                .map(|v| serde_json::to_string(v).expect("vertex"))
                .collect();
            return Err(IoError::Facet {
                path: origin.to_owned(),
                index,
                facet: format!("[{}]", shown.join(",")),
                cause,
            });
        }
    }
    Ok(SimplicialComplex::try_from(file).expect("facets checked"))
}

pub fn parse_complex(path: impl AsRef<Path>) -> Result<SimplicialComplex, IoError> {
    let path = path.as_ref();
    parse_complex_str(&read(path)?, path)
}

/// Canonical single-line JSON followed by a newline.
pub fn canonical_json(k: &SimplicialComplex) -> String {
    let mut s = serde_json::to_string(k).expect("complexes serialize");
    s.push('\n');
    s
}

pub fn write_complex(k: &SimplicialComplex, path: impl AsRef<Path>) -> Result<(), IoError> {
    let path = path.as_ref();
    fs::write(path, canonical_json(k)).map_err(|cause| IoError::Write {
        path: path.to_owned(),
        cause,
    })
}

pub fn parse_configuration(path: impl AsRef<Path>) -> Result<SurfaceConfiguration, IoError> {
    let path = path.as_ref();
    parse_json(&read(path)?, path)
}

/// A replacement catalog: a JSON array of pieces.
pub fn parse_catalog(path: impl AsRef<Path>) -> Result<Vec<LocalPiece>, IoError> {
    let path = path.as_ref();
    parse_json(&read(path)?, path)
}
