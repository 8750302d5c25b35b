//! Parsing of field and function arguments.

use std::path::Path;

use anyhow::{bail, Context, Result};
use vanishing_flats::{DOPolynomial, FieldSpec, FunctionTable};

/// Integer in decimal or `0x` hexadecimal.
pub fn parse_int(s: &str) -> std::result::Result<u64, String> {
    let s = s.trim();
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("invalid integer {s:?}: {e}"))
}

pub fn parse_u32(s: &str) -> std::result::Result<u32, String> {
    let v = parse_int(s)?;
    u32::try_from(v).map_err(|_| format!("{s} does not fit in 32 bits"))
}

pub fn field(n: u32, modulus: Option<u32>) -> Result<FieldSpec> {
    Ok(match modulus {
        Some(m) => FieldSpec::new(n, m)?,
        None => FieldSpec::with_default_modulus(n)?,
    })
}

/// DO terms `i,j:c` separated by commas or semicolons, e.g.
/// `0,3:1,1,2:0x5`.
pub fn parse_do_terms(s: &str) -> Result<Vec<(u32, u32, u32)>> {
    let tokens: Vec<&str> = s
        .split([',', ';'])
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .collect();
    if tokens.is_empty() || !tokens.len().is_multiple_of(2) {
        bail!("DO terms must look like \"i,j:c[,i,j:c...]\", got {s:?}");
    }
    tokens
        .chunks(2)
        .map(|pair| {
            let (j, c) = pair[1]
                .split_once(':')
                .with_context(|| format!("missing ':c' in DO term {:?}", pair.join(",")))?;
            Ok((
                parse_u32(pair[0]).map_err(anyhow::Error::msg)?,
                parse_u32(j).map_err(anyhow::Error::msg)?,
                parse_u32(c).map_err(anyhow::Error::msg)?,
            ))
        })
        .collect()
}

/// Univariate terms `c:e` separated by commas, meaning `sum c x^e`.
pub fn parse_univariate(s: &str) -> Result<Vec<(u32, u64)>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|term| {
            let (c, e) = term
                .split_once(':')
                .with_context(|| format!("univariate term {term:?} must be c:e"))?;
            Ok((
                parse_u32(c).map_err(anyhow::Error::msg)?,
                parse_int(e).map_err(anyhow::Error::msg)?,
            ))
        })
        .collect()
}

/// One value per line; blank lines and `#` comments are skipped.
pub fn read_table_file(field: FieldSpec, path: &Path) -> Result<FunctionTable> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let mut values = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let v = parse_u32(line).map_err(|e| anyhow::anyhow!("{}:{}: {e}", path.display(), k + 1))?;
        values.push(v);
    }
    Ok(FunctionTable::new(field, values)?)
}

/// A function together with what is known about its form.
pub struct Loaded {
    pub table: FunctionTable,
    pub monomial: Option<u64>,
    pub dopoly: Option<DOPolynomial>,
    pub label: String,
}

impl Loaded {
    pub fn monomial(field: FieldSpec, d: u64) -> Result<Self> {
        Ok(Loaded {
            table: FunctionTable::from_monomial(field, d)?,
            monomial: Some(d),
            dopoly: None,
            label: format!("x^{d}"),
        })
    }

    pub fn dopoly(p: DOPolynomial, label: String) -> Self {
        Loaded {
            table: p.to_table(),
            monomial: None,
            dopoly: Some(p),
            label,
        }
    }
}
