//! Index files on disk.

use std::path::Path;

use pennant_core::{load_index, save_index, TermIndex};

use crate::{Error, Result};

pub fn write_index_file(path: &Path, index: &TermIndex) -> Result<()> {
    std::fs::write(path, save_index(index)).map_err(|e| Error::io(path, e))
}

pub fn read_index_file(path: &Path) -> Result<TermIndex> {
    let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
    Ok(load_index(&bytes)?)
}
