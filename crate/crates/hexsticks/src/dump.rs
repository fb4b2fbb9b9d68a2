//! Streaming dumps: constant memory regardless of input size.

use std::io::{self, Read, Write};

use hexsticks_core::dump::{DumpConfig, Dumper};

const CHUNK: usize = 64 * 1024;

/// Reads `input` in fixed-size chunks and writes the dump to `out`.
pub fn dump_stream<R: Read, W: Write>(
    mut input: R,
    out: &mut W,
    cfg: &DumpConfig,
) -> Result<(), crate::Error> {
    let mut dumper = Dumper::new(*cfg)?;
    let per_line = cfg.bytes_per_line;
    let mut buf = vec![0u8; CHUNK.max(per_line)];
    let mut pending: Vec<u8> = Vec::with_capacity(per_line);
    let mut text = String::new();
    let io_err = |e| crate::Error::io("<dump>", e);
    loop {
        let n = match input.read(&mut buf) {
            Ok(0) => break,
            Ok(n) => n,
            Err(e) if e.kind() == io::ErrorKind::Interrupted => continue,
            Err(e) => return Err(io_err(e)),
        };
        let mut data = &buf[..n];
        while !data.is_empty() {
            let take = (per_line - pending.len()).min(data.len());
            pending.extend_from_slice(&data[..take]);
            data = &data[take..];
            if pending.len() == per_line {
                dumper.push_group(&pending, &mut text);
                pending.clear();
            }
        }
        out.write_all(text.as_bytes()).map_err(io_err)?;
        text.clear();
    }
    dumper.push_group(&pending, &mut text);
    out.write_all(text.as_bytes()).map_err(io_err)?;
    out.flush().map_err(io_err)
}
