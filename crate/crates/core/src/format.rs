//! Text formats: matrices, monomials in cycle notation and search report
//! lines.
//!
//! Matrix files start with a header `alpha=<a> beta=<b>` followed by one
//! row per line, binary digits then `|` then quaternary digits. The bar is
//! left out when either part is empty. Blank lines and lines starting with
//! `#` are ignored.

use crate::algebra::{CodeType, MixedMatrix, MixedVector, Shape};
use crate::code::Monomial;
use crate::error::{Error, Result};
use crate::search::Witness;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn digits(s: &str, max: u8, line: usize) -> Result<Vec<u8>> {
    s.chars()
        .map(|c| match c.to_digit(10) {
            Some(d) if d <= max as u32 => Ok(d as u8),
            _ => Err(parse_err(line, format!("`{c}` is not a digit in 0..={max}"))),
        })
        .collect()
}

fn parse_header(s: &str, line: usize) -> Result<Shape> {
    let mut alpha = None;
    let mut beta = None;
    for field in s.split_whitespace() {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| parse_err(line, format!("expected key=value, got `{field}`")))?;
        let value: usize = value
            .parse()
            .map_err(|_| parse_err(line, format!("`{value}` is not a count")))?;
        match key {
            "alpha" if alpha.is_none() => alpha = Some(value),
            "beta" if beta.is_none() => beta = Some(value),
            _ => return Err(parse_err(line, format!("unexpected header field `{key}`"))),
        }
    }
    match (alpha, beta) {
        (Some(a), Some(b)) => Ok(Shape::new(a, b)),
        _ => Err(parse_err(line, "header must be `alpha=<a> beta=<b>`")),
    }
}

pub fn parse_matrix(text: &str) -> Result<MixedMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let shape = parse_header(header, hl)?;
    let split = shape.alpha > 0 && shape.beta > 0;
    let mut rows = Vec::new();
    for (n, l) in lines {
        let (b, q) = if split {
            l.split_once('|')
                .ok_or_else(|| parse_err(n, "row needs a `|` between binary and quaternary parts"))?
        } else if shape.beta == 0 {
            (l, "")
        } else {
            ("", l)
        };
        let bin = digits(b, 1, n)?;
        let quat = digits(q, 3, n)?;
        if bin.len() != shape.alpha || quat.len() != shape.beta {
            return Err(parse_err(
                n,
                format!("row has shape ({},{}), header says {shape}", bin.len(), quat.len()),
            ));
        }
        rows.push(MixedVector::new(bin, quat)?);
    }
    MixedMatrix::new(shape, rows)
}

pub fn format_row(v: &MixedVector) -> String {
    let b: String = v.bin().iter().map(|d| char::from(b'0' + d)).collect();
    let q: String = v.quat().iter().map(|d| char::from(b'0' + d)).collect();
    if v.alpha() > 0 && v.beta() > 0 {
        format!("{b}|{q}")
    } else {
        b + &q
    }
}

pub fn format_matrix(m: &MixedMatrix) -> String {
    let shape = m.shape();
    let mut out = format!("alpha={} beta={}\n", shape.alpha, shape.beta);
    for r in m.rows() {
        out.push_str(&format_row(r));
        out.push('\n');
    }
    out
}

fn parse_coord(s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| parse_err(1, format!("`{}` is not a coordinate", s.trim())))
}

/// Cycle notation on 1-based global coordinates, e.g. `(1,8,7)(9,10)!11`.
/// `!k` negates quaternary coordinate k. An empty string or `()` is the
/// identity.
pub fn parse_monomial(text: &str, shape: Shape) -> Result<Monomial> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut cycles = Vec::new();
    let mut signs = Vec::new();
    let mut rest = s.as_str();
    while !rest.is_empty() {
        if let Some(r) = rest.strip_prefix('(') {
            let end = r.find(')').ok_or_else(|| parse_err(1, "unclosed cycle"))?;
            let body = &r[..end];
            if !body.is_empty() {
                let cycle = body.split(',').map(parse_coord).collect::<Result<Vec<_>>>()?;
                cycles.push(cycle);
            }
            rest = &r[end + 1..];
        } else if let Some(r) = rest.strip_prefix('!') {
            let end = r.find(['(', '!']).unwrap_or(r.len());
            signs.push(parse_coord(&r[..end])?);
            rest = &r[end..];
        } else {
            return Err(parse_err(1, format!("unexpected `{rest}` in permutation")));
        }
    }
    Monomial::from_cycles(shape, &cycles, &signs)
}

/// Cycles only, `()` for a pure sign change or the identity.
pub fn format_cycles(m: &Monomial) -> String {
    let cycles = m.cycles();
    if cycles.is_empty() {
        return "()".into();
    }
    cycles
        .iter()
        .map(|c| {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            format!("({})", parts.join(","))
        })
        .collect()
}

/// One search result: dual type of the intersection, its size, the
/// monomial and the seed of the run that found it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportLine {
    pub dual_type: CodeType,
    pub log2_eta: usize,
    pub monomial: Monomial,
    pub seed: Option<u64>,
}

impl From<&Witness> for ReportLine {
    fn from(w: &Witness) -> Self {
        ReportLine {
            dual_type: w.dual_type,
            log2_eta: w.log2_eta,
            monomial: w.monomial.clone(),
            seed: w.seed,
        }
    }
}

fn format_eta(log2: usize) -> String {
    if log2 < 128 {
        (1u128 << log2).to_string()
    } else {
        format!("2^{log2}")
    }
}

fn parse_eta(s: &str) -> Result<usize> {
    if let Some(k) = s.strip_prefix("2^") {
        return k.parse().map_err(|_| parse_err(1, format!("bad eta `{s}`")));
    }
    let v: u128 = s.parse().map_err(|_| parse_err(1, format!("bad eta `{s}`")))?;
    if !v.is_power_of_two() {
        return Err(parse_err(1, format!("eta {v} is not a power of two")));
    }
    Ok(v.trailing_zeros() as usize)
}

/// `(a,b;g,d;k) eta=<n> pi=<cycles> signs=<coords|none> seed=<s|->`
pub fn format_report(r: &ReportLine) -> String {
    let signs = r.monomial.sign_coords();
    let signs = if signs.is_empty() {
        "none".to_string()
    } else {
        signs.iter().map(|s| (s + 1).to_string()).collect::<Vec<_>>().join(",")
    };
    let seed = r.seed.map_or("-".to_string(), |s| s.to_string());
    format!(
        "{} eta={} pi={} signs={} seed={}",
        r.dual_type,
        format_eta(r.log2_eta),
        format_cycles(&r.monomial),
        signs,
        seed
    )
}

pub fn format_witness(w: &Witness) -> String {
    format_report(&ReportLine::from(w))
}

pub fn parse_code_type(s: &str) -> Result<CodeType> {
    let bad = || parse_err(1, format!("`{s}` is not a type (a,b;g,d;k)"));
    let inner = s.trim().strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
    let nums: Vec<usize> = inner
        .split([',', ';'])
        .map(|x| x.trim().parse().map_err(|_| bad()))
        .collect::<Result<_>>()?;
    match nums[..] {
        [a, b, g, d, k] => CodeType::new(a, b, g, d, k),
        [a, b, g, d] => CodeType::new(a, b, g, d, 0),
        _ => Err(bad()),
    }
}

pub fn parse_report(line: &str) -> Result<ReportLine> {
    let mut fields = line.split_whitespace();
    let dual_type = parse_code_type(fields.next().ok_or_else(|| parse_err(1, "empty report line"))?)?;
    let (mut eta, mut pi, mut signs, mut seed) = (None, None, None, None);
    for f in fields {
        let (k, v) = f.split_once('=').ok_or_else(|| parse_err(1, format!("bad field `{f}`")))?;
        match k {
            "eta" => eta = Some(parse_eta(v)?),
            "pi" => pi = Some(v),
            "signs" => signs = Some(v),
            "seed" => {
                seed = Some(if v == "-" {
                    None
                } else {
                    Some(v.parse().map_err(|_| parse_err(1, format!("bad seed `{v}`")))?)
                })
            }
            _ => return Err(parse_err(1, format!("unknown field `{k}`"))),
        }
    }
    let missing = |name: &str| parse_err(1, format!("report line lacks `{name}=`"));
    let pi = pi.ok_or_else(|| missing("pi"))?;
    let signs = signs.ok_or_else(|| missing("signs"))?;
    let mut text = pi.to_string();
    if signs != "none" {
        for s in signs.split(',') {
            text.push('!');
            text.push_str(s);
        }
    }
    Ok(ReportLine {
        dual_type,
        log2_eta: eta.ok_or_else(|| missing("eta"))?,
        monomial: parse_monomial(&text, dual_type.shape())?,
        seed: seed.ok_or_else(|| missing("seed"))?,
    })
}
