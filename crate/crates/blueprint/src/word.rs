//! Words over the H3 base, the homotopy cycle of the longest element and
//! its validation.

use hfold_roots::{Kind, RootError, RootSystem, WeylGroup};

/// A word over the base, letters being base labels `1, 2, 3`.
pub type Letters = Vec<u8>;

/// The alternating word `(s, t, s, ...)` of length `m`.
pub fn braid_word(m: usize, s: u8, t: u8) -> Letters {
    (0..m).map(|i| if i % 2 == 0 { s } else { t }).collect()
}

/// Coxeter exponent `m_st` of the H3 base labels.
pub fn coxeter_exponent(s: u8, t: u8) -> usize {
    match (s.min(t), s.max(t)) {
        (1, 2) => 3,
        (2, 3) => 5,
        (1, 3) => 2,
        _ => panic!("letters {s}, {t} are not distinct base labels of H3"),
    }
}

/// Renders a word as a digit string.
pub fn render(word: &[u8]) -> String {
    word.iter().map(|d| char::from(b'0' + d)).collect()
}

/// Parses a digit string over `{1, 2, 3}`.
pub fn parse(s: &str) -> Option<Letters> {
    s.bytes().map(|b| matches!(b, b'1'..=b'3').then(|| b - b'0')).collect()
}

/// The homotopy cycle for the longest element of H3 with the moved block
/// of each step in brackets.
pub const HOMOTOPY_CYCLE: [&str; 63] = [
    "[32323]1232312321",
    "2323[212]32312321",
    "232312[13]2312321",
    "232312312[31]2321",
    "2323123[121]32321",
    "232312321[23232]1",
    "232[31]2321323231",
    "23213232[13]23231",
    "2321[32323]123231",
    "23[212]3232123231",
    "23121323[212]3231",
    "2312[13]231213231",
    "2312312312[13]231",
    "2312312[31]231231",
    "2[31]231213231231",
    "21323[121]3231231",
    "2132321232312[31]",
    "21323212323[121]3",
    "2132321[23232]123",
    "213232[13]2323123",
    "21[32323]12323123",
    "[212]323212323123",
    "121323[212]323123",
    "12[13]23121323123",
    "12312[31]21323123",
    "123[121]321323123",
    "12321232[13]23123",
    "12321232312[31]23",
    "123212323[121]323",
    "12321[23232]12323",
    "1232[13]232312323",
    "123231232[31]2323",
    "1232312321[32323]",
    "12323123[212]3232",
    "1232312[31]213232",
    "12323[121]3213232",
    "1[23232]123213232",
    "[13]2323123213232",
    "31232[31]23213232",
    "3123213232[13]232",
    "312321[32323]1232",
    "3123[212]32321232",
    "312[31]2132321232",
    "3[121]32132321232",
    "321232[13]2321232",
    "3212323123[212]32",
    "321232312[31]2132",
    "3212323[121]32132",
    "321[23232]1232132",
    "32[13]23231232132",
    "3231232[31]232132",
    "323123213232[13]2",
    "32312321[32323]12",
    "323123[212]323212",
    "32312[31]21323212",
    "323[121]321323212",
    "32321232[13]23212",
    "323212323123[212]",
    "32321232312[31]21",
    "323212323[121]321",
    "32321[23232]12321",
    "3232[13]232312321",
    "323231232312321",
];

/// One word of the cycle with its marked block `start..start + len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleEntry {
    pub word: Letters,
    pub marked: Option<(usize, usize)>,
}

/// The sequence `f_1, ..., f_63`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyCycle {
    pub entries: Vec<CycleEntry>,
}

fn parse_marked(s: &str) -> Option<CycleEntry> {
    let open = s.find('[');
    let close = s.find(']');
    let plain: String = s.chars().filter(|c| *c != '[' && *c != ']').collect();
    let marked = match (open, close) {
        (Some(o), Some(c)) if c > o => Some((o, c - o - 1)),
        (None, None) => None,
        _ => return None,
    };
    Some(CycleEntry { word: parse(&plain)?, marked })
}

impl HomotopyCycle {
    pub fn embedded() -> Self {
        Self::from_marked(&HOMOTOPY_CYCLE).expect("embedded cycle parses")
    }

    /// Builds a cycle from bracket-marked digit strings.
    pub fn from_marked<S: AsRef<str>>(lines: &[S]) -> Option<Self> {
        Some(HomotopyCycle { entries: lines.iter().map(|l| parse_marked(l.as_ref())).collect::<Option<_>>()? })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn word(&self, i: usize) -> &[u8] {
        &self.entries[i].word
    }
}

/// An elementary braid move `f_i -> f_{i+1}`: the block
/// `braid_word(m, s, t)` at `start` becomes `braid_word(m, t, s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Move {
    pub start: usize,
    pub s: u8,
    pub t: u8,
}

impl Move {
    pub fn len(&self) -> usize {
        coxeter_exponent(self.s, self.t)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The move undoing this one.
    pub fn reverse(&self) -> Move {
        Move { start: self.start, s: self.t, t: self.s }
    }
}

/// Locates the elementary braid move turning `f` into `g`.
pub fn find_move(f: &[u8], g: &[u8]) -> Result<Move, String> {
    if f.len() != g.len() {
        return Err(format!("lengths {} and {} differ", f.len(), g.len()));
    }
    let diff: Vec<usize> = (0..f.len()).filter(|&i| f[i] != g[i]).collect();
    let (Some(&lo), Some(&hi)) = (diff.first(), diff.last()) else {
        return Err("words are equal".into());
    };
    let (s, t) = (f[lo], *f.get(lo + 1).ok_or("block runs past the end")?);
    if s == t {
        return Err(format!("no braid block at {lo}"));
    }
    let m = coxeter_exponent(s, t);
    if hi + 1 - lo != m || lo + m > f.len() {
        return Err(format!("differing block {lo}..={hi} is not a braid block of length {m}"));
    }
    if f[lo..lo + m] != braid_word(m, s, t)[..] || g[lo..lo + m] != braid_word(m, t, s)[..] {
        return Err(format!("block at {lo} is not a braid move of ({s},{t})"));
    }
    Ok(Move { start: lo, s, t })
}

/// The H3 system and its Weyl group, with base labels resolved.
pub struct H3Context {
    pub sys: RootSystem,
    pub weyl: WeylGroup,
}

impl H3Context {
    pub fn new() -> Result<Self, RootError> {
        let sys = RootSystem::new(Kind::H3);
        let weyl = WeylGroup::new(&sys)?;
        Ok(H3Context { sys, weyl })
    }

    fn positions(&self, word: &[u8]) -> Vec<usize> {
        word.iter().map(|&l| self.sys.base_pos(l as usize).expect("H3 base label")).collect()
    }

    /// The Weyl group element of a word.
    pub fn element(&self, word: &[u8]) -> usize {
        let perm = WeylGroup::word_perm(&self.sys, &self.positions(word));
        self.weyl.find(&perm).expect("word lies in the Weyl group")
    }

    pub fn longest(&self) -> usize {
        self.weyl.longest(&self.sys)
    }
}

/// Outcome of validating a homotopy cycle.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CycleReport {
    /// The move of each step, in order.
    pub moves: Vec<Move>,
    /// `(step index, reason)` with 1-based step numbers.
    pub failures: Vec<(usize, String)>,
}

impl CycleReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that consecutive words differ by one elementary braid move at the
/// marked block, that the cycle closes at `f_1`, and that every word is a
/// reduced word of the longest element.
pub fn validate_cycle(cycle: &HomotopyCycle, ctx: &H3Context) -> CycleReport {
    let mut rep = CycleReport::default();
    let w0 = ctx.longest();
    let target_len = ctx.sys.npos();
    for (i, e) in cycle.entries.iter().enumerate() {
        if e.word.len() != target_len || ctx.element(&e.word) != w0 {
            rep.failures.push((i + 1, format!("{} is not a reduced word of the longest element", render(&e.word))));
        }
    }
    for i in 0..cycle.len().saturating_sub(1) {
        match find_move(cycle.word(i), cycle.word(i + 1)) {
            Ok(mv) => {
                if let Some((start, len)) = cycle.entries[i].marked {
                    if (start, len) != (mv.start, mv.len()) {
                        rep.failures.push((i + 1, format!("marked block {start}+{len} differs from the move at {}+{}", mv.start, mv.len())));
                    }
                }
                rep.moves.push(mv);
            }
            Err(why) => rep.failures.push((i + 1, why)),
        }
    }
    match (cycle.entries.first(), cycle.entries.last()) {
        (Some(a), Some(b)) if a.word == b.word => {}
        _ => rep.failures.push((cycle.len(), "the cycle does not close".into())),
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn braid_words() {
        assert_eq!(render(&braid_word(5, 2, 3)), "23232");
        assert_eq!(render(&braid_word(3, 1, 2)), "121");
        assert!(braid_word(0, 1, 2).is_empty());
    }

    #[test]
    fn moves_are_located() {
        let mv = find_move(&parse("1213").unwrap(), &parse("2123").unwrap()).unwrap();
        assert_eq!(mv, Move { start: 0, s: 1, t: 2 });
        assert!(find_move(&parse("123").unwrap(), &parse("123").unwrap()).is_err());
        assert!(find_move(&parse("1232").unwrap(), &parse("1322").unwrap()).is_err());
    }
}
