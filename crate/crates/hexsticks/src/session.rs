//! Editing sessions over a file: overwrite-only patches kept as an ordered
//! log, reads served from disk with the log applied, atomic saves.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Read, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};

use hexsticks_core::{byte_name, encode_nibble, ByteValue};
use serde::Serialize;

#[derive(Debug, thiserror::Error)]
pub enum SessionError {
    #[error("{0}: no such file")]
    NotFound(PathBuf),
    #[error("{0}: permission denied")]
    PermissionDenied(PathBuf),
    #[error("unknown session {0}")]
    SessionUnknown(String),
    #[error("offset {offset} outside file of length {length}")]
    OutOfRange { offset: u64, length: u64 },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
}

impl SessionError {
    fn io(path: &Path, source: io::Error) -> Self {
        SessionError::Io {
            path: path.to_owned(),
            source,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            SessionError::NotFound(_) => "NotFound",
            SessionError::PermissionDenied(_) => "PermissionDenied",
            SessionError::SessionUnknown(_) => "SessionUnknown",
            SessionError::OutOfRange { .. } => "OutOfRange",
            SessionError::Io { .. } => "IoError",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Patch {
    pub offset: u64,
    pub old: u8,
    pub new: u8,
}

/// Bytes of a range with their names and digit segment labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RangeView {
    pub offset: u64,
    pub length: u64,
    pub bytes: Vec<u8>,
    pub names: Vec<String>,
    /// Per byte: high digit labels, then low digit labels.
    pub segments: Vec<[Vec<char>; 2]>,
}

impl RangeView {
    pub fn new(offset: u64, bytes: Vec<u8>) -> RangeView {
        let labels = |n| -> Vec<char> { encode_nibble(n).iter().map(|s| s.label()).collect() };
        RangeView {
            offset,
            length: bytes.len() as u64,
            names: bytes.iter().map(|b| byte_name(ByteValue(*b)).text()).collect(),
            segments: bytes
                .iter()
                .map(|b| {
                    let b = ByteValue(*b);
                    [labels(b.high()), labels(b.low())]
                })
                .collect(),
            bytes,
        }
    }
}

#[derive(Debug)]
pub struct Session {
    pub id: String,
    path: PathBuf,
    length: u64,
    dirty: bool,
    patches: Vec<Patch>,
    /// Latest value per patched offset; equals replaying `patches`.
    overlay: BTreeMap<u64, u8>,
}

fn classify_open(path: &Path, e: io::Error) -> SessionError {
    match e.kind() {
        io::ErrorKind::NotFound => SessionError::NotFound(path.to_owned()),
        io::ErrorKind::PermissionDenied => SessionError::PermissionDenied(path.to_owned()),
        _ => SessionError::io(path, e),
    }
}

impl Session {
    pub fn open(path: impl AsRef<Path>) -> Result<Session, SessionError> {
        let path = path.as_ref();
        let file = File::open(path).map_err(|e| classify_open(path, e))?;
        let meta = file.metadata().map_err(|e| SessionError::io(path, e))?;
        if !meta.is_file() {
            return Err(SessionError::io(
                path,
                io::Error::new(io::ErrorKind::InvalidInput, "not a regular file"),
            ));
        }
        Ok(Session {
            id: uuid::Uuid::new_v4().simple().to_string(),
            path: path.to_owned(),
            length: meta.len(),
            dirty: false,
            patches: Vec::new(),
            overlay: BTreeMap::new(),
        })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> u64 {
        self.length
    }

    pub fn is_empty(&self) -> bool {
        self.length == 0
    }

    pub fn is_dirty(&self) -> bool {
        self.dirty
    }

    pub fn patches(&self) -> &[Patch] {
        &self.patches
    }

    fn read_disk(&self, offset: u64, len: usize) -> Result<Vec<u8>, SessionError> {
        let mut buf = vec![0u8; len];
        let mut file = File::open(&self.path).map_err(|e| SessionError::io(&self.path, e))?;
        file.seek(SeekFrom::Start(offset))
            .and_then(|_| file.read_exact(&mut buf))
            .map_err(|e| SessionError::io(&self.path, e))?;
        Ok(buf)
    }

    /// Up to `length` bytes from `offset`, clamped to the file end.
    pub fn read_range(&self, offset: u64, length: u64) -> Result<RangeView, SessionError> {
        let end = offset.saturating_add(length).min(self.length);
        if offset >= end {
            return Ok(RangeView::new(offset, Vec::new()));
        }
        let mut bytes = self.read_disk(offset, (end - offset) as usize)?;
        for (&at, &value) in self.overlay.range(offset..end) {
            bytes[(at - offset) as usize] = value;
        }
        Ok(RangeView::new(offset, bytes))
    }

    /// Overwrites one byte in the view and logs the change.
    pub fn apply_patch(&mut self, offset: u64, value: u8) -> Result<Patch, SessionError> {
        if offset >= self.length {
            return Err(SessionError::OutOfRange {
                offset,
                length: self.length,
            });
        }
        let old = match self.overlay.get(&offset) {
            Some(v) => *v,
            None => self.read_disk(offset, 1)?[0],
        };
        let patch = Patch {
            offset,
            old,
            new: value,
        };
        self.patches.push(patch);
        self.overlay.insert(offset, value);
        self.dirty = true;
        Ok(patch)
    }

    /// Writes the patched view to a sibling temp file and renames it over
    /// the original. A clean session is left untouched.
    pub fn save(&mut self) -> Result<(), SessionError> {
        if !self.dirty {
            return Ok(());
        }
        let err = |e: io::Error| SessionError::io(&self.path, e);
        let dir = match self.path.parent() {
            Some(p) if !p.as_os_str().is_empty() => p.to_owned(),
            _ => PathBuf::from("."),
        };
        let mut src = File::open(&self.path).map_err(err)?;
        let perms = src.metadata().map_err(err)?.permissions();
        let tmp = tempfile::NamedTempFile::new_in(&dir).map_err(err)?;
        {
            let mut out = BufWriter::new(tmp.as_file());
            let mut buf = vec![0u8; 64 * 1024];
            let mut pos = 0u64;
            loop {
                let n = src.read(&mut buf).map_err(err)?;
                if n == 0 {
                    break;
                }
                let chunk_end = pos + n as u64;
                for (&at, &value) in self.overlay.range(pos..chunk_end) {
                    buf[(at - pos) as usize] = value;
                }
                out.write_all(&buf[..n]).map_err(err)?;
                pos = chunk_end;
            }
            out.flush().map_err(err)?;
        }
        tmp.as_file().sync_all().map_err(err)?;
        tmp.as_file().set_permissions(perms).map_err(err)?;
        tmp.persist(&self.path).map_err(|e| err(e.error))?;
        self.dirty = false;
        Ok(())
    }
}
