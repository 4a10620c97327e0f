//! Generator names and generator words, with the textual grammar
//! `iota[i] lam[i] s[i] m[i,j] l[i,j] sik[i,k] sikp[i,k] t[i,k] mer[h,b] merp[h,b] tu[j] tv[j]`,
//! each token optionally suffixed by `^-1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::tokens;

/// One generator of the catalog. All indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorName {
    /// Half twist exchanging the endpoints of arc `i`.
    Interval(usize),
    /// Exchange of arcs `i` and `i+1`.
    Exchange(usize),
    /// Dehn twist about the boundary of the disk around arc `i`.
    Twist(usize),
    /// Slide of arc `i` along the meridian-wise curve of handle `j`.
    SlideM(usize, usize),
    /// Slide of arc `i` along the longitude-wise curve of handle `j`.
    SlideL(usize, usize),
    /// Slide of arc `i` around the first endpoint of arc `k`.
    SlideS(usize, usize),
    /// Slide of arc `i` around the second endpoint of arc `k`.
    SlideSP(usize, usize),
    /// Slide of arc `i` around the whole arc `k`.
    SlideT(usize, usize),
    /// Slide of a meridian disk of handle `handle` around basis curve `basis`:
    /// `basis ≤ n` is the arc pair `basis`, `basis = n + h'` is the handle `h'`.
    MeridianSlide { handle: usize, basis: usize, primed: bool },
    /// Dehn twist along the longitude of handle `j`.
    HandleTwistU(usize),
    /// Dehn twist along the meridian of handle `j`.
    HandleTwistV(usize),
}

impl GeneratorName {
    /// Checks the indices against a surface with `genus` handles and `arcs` arcs.
    pub fn check_range(&self, genus: usize, arcs: usize) -> Result<()> {
        use GeneratorName::*;
        let arc = |i: usize| (1..=arcs).contains(&i);
        let handle = |j: usize| (1..=genus).contains(&j);
        let ok = match *self {
            Interval(i) | Twist(i) => arc(i),
            Exchange(i) => i >= 1 && i < arcs,
            SlideM(i, j) | SlideL(i, j) => arc(i) && handle(j),
            SlideS(i, k) | SlideSP(i, k) | SlideT(i, k) => arc(i) && arc(k) && i != k,
            MeridianSlide { handle: h, basis, .. } => {
                if genus == 0 {
                    return Err(Error::Domain(format!("{self}: meridian slides need genus ≥ 1")));
                }
                handle(h) && (arc(basis) || (basis > arcs && handle(basis - arcs) && basis - arcs != h))
            }
            HandleTwistU(j) | HandleTwistV(j) => handle(j),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange(format!("{self} at genus {genus} with {arcs} arcs")))
        }
    }

    /// Generators supported away from the disk containing the arcs.
    pub fn is_handle_twist(&self) -> bool {
        matches!(self, GeneratorName::HandleTwistU(_) | GeneratorName::HandleTwistV(_))
    }
}

impl fmt::Display for GeneratorName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GeneratorName::*;
        match *self {
            Interval(i) => write!(f, "iota[{i}]"),
            Exchange(i) => write!(f, "lam[{i}]"),
            Twist(i) => write!(f, "s[{i}]"),
            SlideM(i, j) => write!(f, "m[{i},{j}]"),
            SlideL(i, j) => write!(f, "l[{i},{j}]"),
            SlideS(i, k) => write!(f, "sik[{i},{k}]"),
            SlideSP(i, k) => write!(f, "sikp[{i},{k}]"),
            SlideT(i, k) => write!(f, "t[{i},{k}]"),
            MeridianSlide { handle, basis, primed: false } => write!(f, "mer[{handle},{basis}]"),
            MeridianSlide { handle, basis, primed: true } => write!(f, "merp[{handle},{basis}]"),
            HandleTwistU(j) => write!(f, "tu[{j}]"),
            HandleTwistV(j) => write!(f, "tv[{j}]"),
        }
    }
}

impl FromStr for GeneratorName {
    type Err = Error;

    fn from_str(tok: &str) -> Result<Self> {
        parse_name(tok, 0)
    }
}

fn parse_name(tok: &str, pos: usize) -> Result<GeneratorName> {
    use GeneratorName::*;
    let syntax = |msg: String| Error::Syntax { pos, msg };
    let open = tok.find('[').ok_or_else(|| syntax(format!("expected `name[...]`, got `{tok}`")))?;
    let inner = tok[open + 1..].strip_suffix(']').ok_or_else(|| syntax(format!("missing `]` in `{tok}`")))?;
    let head = &tok[..open];
    let idx: Vec<usize> = inner
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| syntax(format!("bad index list `{inner}`")))?;
    if idx.contains(&0) {
        return Err(Error::IndexOutOfRange(format!("`{tok}` at byte {pos}: indices are 1-based")));
    }
    let one = |ctor: fn(usize) -> GeneratorName| match idx.as_slice() {
        [i] => Ok(ctor(*i)),
        _ => Err(syntax(format!("`{head}` takes one index"))),
    };
    let two = |ctor: fn(usize, usize) -> GeneratorName| match idx.as_slice() {
        [i, j] => Ok(ctor(*i, *j)),
        _ => Err(syntax(format!("`{head}` takes two indices"))),
    };
    match head {
        "iota" => one(Interval),
        "lam" => one(Exchange),
        "s" => one(Twist),
        "tu" => one(HandleTwistU),
        "tv" => one(HandleTwistV),
        "m" => two(SlideM),
        "l" => two(SlideL),
        "sik" => two(SlideS),
        "sikp" => two(SlideSP),
        "t" => two(SlideT),
        "mer" => two(|h, b| MeridianSlide { handle: h, basis: b, primed: false }),
        "merp" => two(|h, b| MeridianSlide { handle: h, basis: b, primed: true }),
        _ => Err(syntax(format!("unknown generator `{head}`"))),
    }
}

/// A finite product of generators with exponents ±1, read left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GeneratorWord {
    pub factors: Vec<(GeneratorName, i32)>,
}

impl GeneratorWord {
    pub fn empty() -> Self {
        GeneratorWord::default()
    }

    pub fn single(name: GeneratorName) -> Self {
        GeneratorWord { factors: vec![(name, 1)] }
    }

    pub fn from_factors(factors: Vec<(GeneratorName, i32)>) -> Self {
        GeneratorWord { factors }
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn concat(&self, other: &GeneratorWord) -> GeneratorWord {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        GeneratorWord { factors }
    }

    pub fn inverse(&self) -> GeneratorWord {
        GeneratorWord { factors: self.factors.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    pub fn pow(&self, k: i64) -> GeneratorWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = GeneratorWord::empty();
        for _ in 0..k.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Parses the token grammar; an empty string is the empty word.
    pub fn parse(text: &str) -> Result<Self> {
        let mut factors = Vec::new();
        for (pos, tok) in tokens(text) {
            let (name, exp) = match tok.strip_suffix("^-1") {
                Some(base) => (base, -1),
                None => (tok.strip_suffix("^1").unwrap_or(tok), 1),
            };
            factors.push((parse_name(name, pos)?, exp));
        }
        Ok(GeneratorWord { factors })
    }

    /// Parses and range-checks every factor.
    pub fn parse_for(text: &str, genus: usize, arcs: usize) -> Result<Self> {
        let w = Self::parse(text)?;
        w.check_range(genus, arcs)?;
        Ok(w)
    }

    pub fn check_range(&self, genus: usize, arcs: usize) -> Result<()> {
        self.factors.iter().try_for_each(|(g, _)| g.check_range(genus, arcs))
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (g, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
            if *e < 0 {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

impl FromStr for GeneratorWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use GeneratorName::*;

    #[test]
    fn parse_examples() {
        let w = GeneratorWord::parse("iota[1] lam[2]^-1").unwrap();
        assert_eq!(w.factors, vec![(Interval(1), 1), (Exchange(2), -1)]);
        assert!(GeneratorWord::parse("").unwrap().is_empty());
        assert!(matches!(GeneratorWord::parse("iota[0]"), Err(Error::IndexOutOfRange(_))));
    }

    #[test]
    fn parse_errors() {
        match GeneratorWord::parse("s[1] bogus[2]") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("{other:?}"),
        }
        assert!(GeneratorWord::parse("m[1]").is_err());
        assert!(GeneratorWord::parse("iota[1").is_err());
        assert!(GeneratorWord::parse("iota[x]").is_err());
    }

    #[test]
    fn all_tokens_round_trip() {
        let text =
            "iota[1] lam[1] s[2]^-1 m[1,2] l[2,1] sik[1,2] sikp[2,1]^-1 t[1,2] mer[1,2] merp[2,3] tu[1] tv[2]^-1";
        let w = GeneratorWord::parse(text).unwrap();
        assert_eq!(w.to_string(), text);
    }

    #[test]
    fn range_checks() {
        assert!(Interval(3).check_range(0, 2).is_err());
        assert!(Exchange(2).check_range(0, 2).is_err());
        assert!(SlideS(1, 1).check_range(1, 2).is_err());
        assert!(MeridianSlide { handle: 1, basis: 1, primed: false }.check_range(0, 2).is_err());
        assert!(MeridianSlide { handle: 1, basis: 3, primed: false }.check_range(1, 2).is_err());
        assert!(MeridianSlide { handle: 1, basis: 4, primed: true }.check_range(2, 2).is_ok());
        assert!(HandleTwistU(1).check_range(1, 1).is_ok());
    }
}
