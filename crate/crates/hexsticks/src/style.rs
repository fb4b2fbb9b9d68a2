use std::path::Path;

use hexsticks_core::StyleProfile;

use crate::Error;

/// Reads a JSON style config; absent fields keep their defaults.
pub fn load_style(path: &Path) -> Result<StyleProfile, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let style: StyleProfile = serde_json::from_str(&text).map_err(|source| Error::Json {
        path: path.to_owned(),
        source,
    })?;
    style.validate()?;
    Ok(style)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn partial_config_uses_defaults() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        write!(f, r#"{{"slope": 10.0, "corner_rounding": 0.1}}"#).unwrap();
        let s = load_style(f.path()).unwrap();
        assert_eq!(s.slope, 10.0);
        assert_eq!(s.stroke_width, StyleProfile::default().stroke_width);
    }

    #[test]
    fn bad_configs() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        write!(f, r#"{{"tilt": 1}}"#).unwrap();
        assert!(matches!(load_style(f.path()), Err(Error::Json { .. })));
        let mut g = tempfile::NamedTempFile::new().unwrap();
        write!(g, r#"{{"corner_rounding": 3}}"#).unwrap();
        assert!(matches!(load_style(g.path()), Err(Error::Model(_))));
        assert!(matches!(
            load_style(Path::new("/nonexistent/style.json")),
            Err(Error::Io { .. })
        ));
    }
}
