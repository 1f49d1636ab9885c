use super::regions::detect_twist_regions;
use super::{LinkDiagram, TwistRegion};
use crate::error::{Result, SkeinError};

struct Cursor<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(SkeinError::Parse { pos: self.pos, msg: msg.into() })
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        self.skip_ws();
        if self.text[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            Ok(())
        } else {
            self.err(format!("expected `{token}`"))
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a nonnegative integer");
        }
        let s = std::str::from_utf8(&self.text[start..self.pos]).expect("ascii digits");
        s.parse().map_err(|_| SkeinError::Parse { pos: start, msg: format!("integer `{s}` is too large") })
    }

    /// Comma-separated items up to `close`.
    fn list<T>(&mut self, close: u8, mut item: impl FnMut(&mut Self) -> Result<T>) -> Result<Vec<T>> {
        let mut out = Vec::new();
        if self.peek() == Some(close) {
            self.pos += 1;
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(c) if c == close => {
                    self.pos += 1;
                    return Ok(out);
                }
                _ => return self.err(format!("expected `,` or `{}`", close as char)),
            }
        }
    }
}

fn crossing(cur: &mut Cursor) -> Result<[u32; 4]> {
    cur.expect("X")?;
    cur.expect("[")?;
    let start = cur.pos;
    let labels = cur.list(b']', |c| c.number())?;
    if labels.len() != 4 {
        return Err(SkeinError::Parse {
            pos: start,
            msg: format!("a crossing needs 4 arc labels, found {}", labels.len()),
        });
    }
    Ok([labels[0], labels[1], labels[2], labels[3]])
}

fn region(cur: &mut Cursor) -> Result<Vec<usize>> {
    cur.expect("{")?;
    let items = cur.list(b'}', |c| c.number())?;
    Ok(items.into_iter().map(|i| i as usize).collect())
}

/// Parses `PD[X[a,b,c,d], ...]`, optionally followed by `Regions[{1,2},{3}]`
/// (1-based crossing indices). Without the annotation, twist regions are detected.
pub fn parse_pd(text: &str) -> Result<LinkDiagram> {
    let mut cur = Cursor { text: text.as_bytes(), pos: 0 };
    cur.expect("PD")?;
    cur.expect("[")?;
    let crossings = cur.list(b']', crossing)?;
    let mut regions = None;
    if cur.eat("Regions") {
        cur.expect("[")?;
        let start = cur.pos;
        let lists = cur.list(b']', region)?;
        let mut out = Vec::new();
        for (i, l) in lists.into_iter().enumerate() {
            if l.iter().any(|&c| c == 0 || c > crossings.len()) {
                return Err(SkeinError::Parse {
                    pos: start,
                    msg: format!("region {} names a missing crossing", i + 1),
                });
            }
            out.push(TwistRegion { id: i + 1, crossings: l.into_iter().map(|c| c - 1).collect() });
        }
        regions = Some(out);
    }
    if cur.peek().is_some() {
        return cur.err("unexpected trailing input");
    }
    let regions = match regions {
        Some(r) => r,
        None => detect_twist_regions(&crossings),
    };
    LinkDiagram::new("pd", crossings, regions, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hopf_link_has_one_region() {
        let d = parse_pd("PD[X[1,4,2,3],X[3,2,4,1]]").unwrap();
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(d.regions().len(), 1);
        assert_eq!(d.regions()[0].count(), 2);
    }

    #[test]
    fn arity_errors_report_position() {
        match parse_pd("PD[X[1,2,3]]") {
            Err(SkeinError::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn multiplicity_is_checked() {
        assert!(matches!(parse_pd("PD[X[1,2,3,4]]"), Err(SkeinError::ArcMultiplicity { .. })));
        assert!(parse_pd("PD[X[1,1,2,2]]").is_ok());
    }

    #[test]
    fn explicit_regions() {
        let d = parse_pd("PD[X[1,4,2,3],X[3,2,4,1]] Regions[{1},{2}]").unwrap();
        assert_eq!(d.regions().len(), 2);
        assert!(parse_pd("PD[X[1,1,2,2]] Regions[{2}]").is_err());
    }
}
