//! The corpus registry and group specifications: builtin names or group files.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use bgawc_core::group::{
    alternating_presentation, cyclic_presentation, dihedral_presentation, klein_four_presentation, parse_group_file,
    quaternion8_presentation, sl2_3_presentation, symmetric_presentation, trivial_presentation, PermGroup,
    Presentation,
};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    /// A builtin specification such as `symmetric 4` or `C3xS3`.
    Builtin(String),
    File(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub source: Source,
    /// Primes to test; `None` means every prime dividing the order.
    pub primes: Option<Vec<u32>>,
}

impl CorpusEntry {
    pub fn builtin(name: &str, spec: &str) -> Self {
        CorpusEntry {
            name: name.to_string(),
            source: Source::Builtin(spec.to_string()),
            primes: None,
        }
    }

    pub fn with_primes(mut self, primes: Vec<u32>) -> Self {
        self.primes = Some(primes);
        self
    }

    /// Parses the specification without materializing the group.
    pub fn presentation(&self) -> Result<Presentation, CliError> {
        match &self.source {
            Source::Builtin(spec) => parse_builtin(spec),
            Source::File(path) => read_group_file(path),
        }
    }

    pub fn resolve(&self, max_order: usize) -> Result<Arc<PermGroup>, CliError> {
        Ok(self.presentation()?.materialize(max_order)?)
    }

    pub fn primes_for(&self, order: usize) -> Vec<u32> {
        self.primes.clone().unwrap_or_else(|| prime_divisors(order))
    }
}

/// The default corpus. `C7` is also run at `p = 2`, where Frobenius permutes its blocks.
pub fn default_corpus() -> Vec<CorpusEntry> {
    let mut out: Vec<CorpusEntry> = [
        ("C2", "cyclic 2"),
        ("C3", "cyclic 3"),
        ("C7", "cyclic 7"),
        ("S3", "symmetric 3"),
        ("D8", "dihedral 8"),
        ("Q8", "quaternion8"),
        ("A4", "alternating 4"),
        ("SL(2,3)", "SL(2,3)"),
        ("S4", "symmetric 4"),
        ("C3xS3", "cyclic 3 x symmetric 3"),
        ("A5", "alternating 5"),
        ("S5", "symmetric 5"),
    ]
    .into_iter()
    .map(|(name, spec)| CorpusEntry::builtin(name, spec))
    .collect();
    out[2] = out[2].clone().with_primes(vec![2, 7]);
    out
}

pub fn prime_divisors(n: usize) -> Vec<u32> {
    (2..=n as u32)
        .filter(|&p| n.is_multiple_of(p as usize) && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0))
        .collect()
}

fn read_group_file(path: &Path) -> Result<Presentation, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    Ok(parse_group_file(&text)?)
}

/// A builtin name or an existing group file.
pub fn parse_group(source: &str, max_order: usize) -> Result<Arc<PermGroup>, CliError> {
    entry_for(source).resolve(max_order)
}

/// The corpus entry for a command-line group argument.
pub fn entry_for(source: &str) -> CorpusEntry {
    let path = Path::new(source);
    if path.is_file() {
        CorpusEntry {
            name: path
                .file_stem()
                .map_or(source.to_string(), |s| s.to_string_lossy().into_owned()),
            source: Source::File(path.to_path_buf()),
            primes: None,
        }
    } else {
        CorpusEntry::builtin(source.trim(), source)
    }
}

/// Builtins: `cyclic n`/`Cn`, `dihedral n`/`Dn` (order `n`), `symmetric n`/`Sn`,
/// `alternating n`/`An`, `quaternion8`/`Q8`, `SL(2,3)`, `klein4`/`V4`, `trivial`, and
/// direct products joined by `x` or `×`.
pub fn parse_builtin(spec: &str) -> Result<Presentation, CliError> {
    let unknown = || CliError::UnknownGroup(spec.to_string());
    let factors: Vec<&str> = spec.split(['x', '×']).map(str::trim).collect();
    if factors.iter().any(|f| f.is_empty()) {
        return Err(unknown());
    }
    let mut parts = factors.into_iter().map(|f| parse_factor(f).ok_or_else(unknown));
    let first = parts.next().ok_or_else(unknown)??;
    parts.try_fold(first, |acc, p| Ok(acc.product(&p?)))
}

fn parse_factor(s: &str) -> Option<Presentation> {
    let lower = s.to_ascii_lowercase().replace(' ', "");
    match lower.as_str() {
        "quaternion8" | "q8" => return Some(quaternion8_presentation()),
        "sl(2,3)" | "sl2_3" | "sl23" => return Some(sl2_3_presentation()),
        "klein4" | "v4" => return Some(klein_four_presentation()),
        "trivial" | "1" => return Some(trivial_presentation()),
        _ => {}
    }
    let split = lower.find(|c: char| c.is_ascii_digit())?;
    let (family, n) = lower.split_at(split);
    let n: usize = n.parse().ok().filter(|&n| n >= 1)?;
    match family {
        "cyclic" | "c" => Some(cyclic_presentation(n)),
        "dihedral" | "d" => dihedral_presentation(n).ok(),
        "symmetric" | "s" => Some(symmetric_presentation(n)),
        "alternating" | "a" => Some(alternating_presentation(n)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(spec: &str) -> usize {
        parse_builtin(spec).unwrap().materialize(usize::MAX).unwrap().order()
    }

    #[test]
    fn builtin_orders() {
        assert_eq!(order("symmetric 3"), 6);
        assert_eq!(order("S3"), 6);
        assert_eq!(order("SL(2,3)"), 24);
        assert_eq!(order("dihedral 8"), 8);
        assert_eq!(order("C3xS3"), 18);
        assert_eq!(order("cyclic 3 × klein4"), 12);
        assert_eq!(order("Q8"), 8);
        assert_eq!(order("A5"), 60);
    }

    #[test]
    fn rejects_unknown_specs() {
        for bad in ["", "foo", "C0", "S3x", "dihedral 7", "x"] {
            assert!(parse_builtin(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn default_primes() {
        let c = default_corpus();
        assert_eq!(c.len(), 12);
        assert_eq!(c[2].primes_for(7), vec![2, 7]);
        assert_eq!(c[11].primes_for(120), vec![2, 3, 5]);
    }
}
