//! Tournament digraphs, seedings and knockout simulation.
//!
//! A bracket over `n = 2^c` players is fixed: leaves are numbered left to
//! right, leaves `2i` and `2i + 1` meet in round 1, and the winners of
//! adjacent round-`r` matches meet in round `r + 1`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError, ParseErrorKind, Result};

/// Player index in `0..n`.
pub type Player = usize;

/// A complete orientation on `n = 2^c` players with a designated favorite.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: usize,
    beats: Vec<bool>,
    vstar: Player,
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Tournament")
            .field("n", &self.n)
            .field("vstar", &self.vstar)
            .field("rows", &self.rows())
            .finish()
    }
}

impl Tournament {
    /// Builds a tournament from a full `n × n` outcome matrix.
    pub fn from_matrix(matrix: &[Vec<bool>], vstar: Player) -> Result<Self> {
        let n = matrix.len();
        if !n.is_power_of_two() {
            return Err(Error::InvalidTournament(format!(
                "n={n} is not a power of two"
            )));
        }
        if vstar >= n {
            return Err(Error::InvalidTournament(format!(
                "vstar={vstar} out of range"
            )));
        }
        let mut beats = Vec::with_capacity(n * n);
        for (u, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTournament(format!(
                    "row {u} has {} entries, expected {n}",
                    row.len()
                )));
            }
            beats.extend_from_slice(row);
        }
        let t = Self { n, beats, vstar };
        t.check_orientation()?;
        Ok(t)
    }

    /// Builds a tournament from `'0'`/`'1'` row strings.
    pub fn from_rows<S: AsRef<str>>(rows: &[S], vstar: Player) -> Result<Self> {
        let matrix = rows
            .iter()
            .enumerate()
            .map(|(u, row)| {
                row.as_ref()
                    .chars()
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        other => Err(Error::InvalidTournament(format!(
                            "row {u}: non-binary cell {other:?}"
                        ))),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_matrix(&matrix, vstar)
    }

    /// Builds a tournament where `upper_beats(u, v)` decides the pair `u < v`.
    pub fn from_fn(
        n: usize,
        vstar: Player,
        mut upper_beats: impl FnMut(Player, Player) -> bool,
    ) -> Result<Self> {
        if !n.is_power_of_two() {
            return Err(Error::InvalidTournament(format!(
                "n={n} is not a power of two"
            )));
        }
        if vstar >= n {
            return Err(Error::InvalidTournament(format!(
                "vstar={vstar} out of range"
            )));
        }
        let mut beats = vec![false; n * n];
        for u in 0..n {
            for v in u + 1..n {
                if upper_beats(u, v) {
                    beats[u * n + v] = true;
                } else {
                    beats[v * n + u] = true;
                }
            }
        }
        Ok(Self { n, beats, vstar })
    }

    fn check_orientation(&self) -> Result<()> {
        for u in 0..self.n {
            if self.beats(u, u) {
                return Err(Error::InvalidTournament(format!("player {u} beats itself")));
            }
            for v in u + 1..self.n {
                if self.beats(u, v) == self.beats(v, u) {
                    return Err(Error::InvalidTournament(format!(
                        "players {u} and {v}: exactly one must beat the other"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vstar(&self) -> Player {
        self.vstar
    }

    /// Number of rounds, `log2 n`.
    pub fn rounds(&self) -> usize {
        self.n.trailing_zeros() as usize
    }

    #[inline]
    pub fn beats(&self, u: Player, v: Player) -> bool {
        self.beats[u * self.n + v]
    }

    /// Winner of the match between `u` and `v`.
    #[inline]
    pub fn winner(&self, u: Player, v: Player) -> Player {
        if self.beats(u, v) {
            u
        } else {
            v
        }
    }

    pub fn is_in_neighbor(&self, u: Player) -> bool {
        self.beats(u, self.vstar)
    }

    /// Players that beat the favorite, ascending.
    pub fn in_neighbors(&self) -> Vec<Player> {
        (0..self.n).filter(|&u| self.beats(u, self.vstar)).collect()
    }

    /// Players the favorite beats, ascending.
    pub fn out_neighbors(&self) -> Vec<Player> {
        (0..self.n).filter(|&u| self.beats(self.vstar, u)).collect()
    }

    /// In-degree of the favorite.
    pub fn k(&self) -> usize {
        (0..self.n).filter(|&u| self.beats(u, self.vstar)).count()
    }

    /// Out-degree of the favorite.
    pub fn ell(&self) -> usize {
        (0..self.n).filter(|&u| self.beats(self.vstar, u)).count()
    }

    /// Matrix rows as `'0'`/`'1'` strings.
    pub fn rows(&self) -> Vec<String> {
        (0..self.n)
            .map(|u| {
                (0..self.n)
                    .map(|v| if self.beats(u, v) { '1' } else { '0' })
                    .collect()
            })
            .collect()
    }

    /// Serializes to the TFP v1 text format.
    pub fn to_tfp_string(&self) -> String {
        let mut out = format!("TFP v1\nn={} vstar={}\n", self.n, self.vstar);
        for row in self.rows() {
            out.push_str(&row);
            out.push('\n');
        }
        out
    }

    /// Parses the TFP v1 text format.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)))
            .filter(|(_, l)| !l.starts_with('#') && !l.trim().is_empty());

        let (magic_line, magic) = lines
            .next()
            .ok_or_else(|| ParseError::new(1, 1, ParseErrorKind::MissingMagic))?;
        if magic.trim() != "TFP v1" {
            return Err(ParseError::new(magic_line, 1, ParseErrorKind::MissingMagic));
        }

        let (hline, header) = lines.next().ok_or_else(|| {
            ParseError::new(
                magic_line + 1,
                1,
                ParseErrorKind::MalformedHeader("missing `n=<int> vstar=<int>` line".into()),
            )
        })?;
        let (n, vstar) = parse_header(hline, header)?;

        let mut beats = vec![false; n * n];
        let mut row_lines = Vec::with_capacity(n);
        for u in 0..n {
            let Some((line, row)) = lines.next() else {
                return Err(ParseError::new(
                    row_lines.last().map_or(hline, |&l| l) + 1,
                    1,
                    ParseErrorKind::MissingRows {
                        expected: n,
                        found: u,
                    },
                ));
            };
            let row = row.trim_end();
            let cells: Vec<char> = row.chars().collect();
            for (v, &c) in cells.iter().enumerate().take(n) {
                let bit = match c {
                    '0' => false,
                    '1' => true,
                    other => {
                        return Err(ParseError::new(line, v + 1, ParseErrorKind::BadCell(other)))
                    }
                };
                if u == v && bit {
                    return Err(ParseError::new(line, v + 1, ParseErrorKind::Diagonal(u)));
                }
                beats[u * n + v] = bit;
            }
            if cells.len() != n {
                return Err(ParseError::new(
                    line,
                    cells.len().min(n) + 1,
                    ParseErrorKind::RowLength {
                        expected: n,
                        found: cells.len(),
                    },
                ));
            }
            row_lines.push(line);
        }
        if let Some((line, _)) = lines.next() {
            return Err(ParseError::new(line, 1, ParseErrorKind::TrailingContent));
        }
        for u in 0..n {
            for v in 0..u {
                if beats[u * n + v] == beats[v * n + u] {
                    return Err(ParseError::new(
                        row_lines[u],
                        v + 1,
                        ParseErrorKind::Antisymmetry { u: v, v: u },
                    ));
                }
            }
        }
        Ok(Self { n, beats, vstar })
    }
}

fn parse_header(line: usize, header: &str) -> Result<(usize, Player), ParseError> {
    let malformed = |col: usize, msg: &str| {
        ParseError::new(line, col, ParseErrorKind::MalformedHeader(msg.to_string()))
    };
    let mut n = None;
    let mut vstar = None;
    let mut col = 1;
    let mut fields = 0;
    for raw in header.split(' ') {
        if raw.is_empty() {
            col += 1;
            continue;
        }
        fields += 1;
        let (key, value) = raw
            .split_once('=')
            .ok_or_else(|| malformed(col, "expected key=value"))?;
        let parsed: usize = value
            .parse()
            .map_err(|_| malformed(col + key.len() + 1, "expected a non-negative integer"))?;
        match key {
            "n" if n.is_none() => n = Some((parsed, col)),
            "vstar" if vstar.is_none() => vstar = Some((parsed, col)),
            _ => return Err(malformed(col, "expected `n=` then `vstar=`")),
        }
        col += raw.len() + 1;
    }
    let (Some((n, ncol)), Some((vstar, vcol)), 2) = (n, vstar, fields) else {
        return Err(malformed(1, "expected `n=<int> vstar=<int>`"));
    };
    if !n.is_power_of_two() {
        return Err(ParseError::new(
            line,
            ncol,
            ParseErrorKind::NotPowerOfTwo(n),
        ));
    }
    if vstar >= n {
        return Err(ParseError::new(
            line,
            vcol,
            ParseErrorKind::VstarOutOfRange { vstar, n },
        ));
    }
    Ok((n, vstar))
}

impl FromStr for Tournament {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        Self::parse(s)
    }
}

/// Assignment of players to bracket leaves.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Seeding(Vec<Player>);

impl Seeding {
    /// `leaf_order[p]` is the player placed on leaf `p`.
    pub fn new(leaf_order: Vec<Player>) -> Result<Self> {
        let n = leaf_order.len();
        if !n.is_power_of_two() {
            return Err(Error::InvalidSeeding(format!(
                "{n} leaves is not a power of two"
            )));
        }
        let mut seen = vec![false; n];
        for &p in &leaf_order {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidSeeding(format!(
                    "leaf order is not a permutation of 0..{n}"
                )));
            }
        }
        Ok(Self(leaf_order))
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new((0..n).collect())
    }

    pub fn leaf_order(&self) -> &[Player] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_inner(self) -> Vec<Player> {
        self.0
    }
}

impl fmt::Display for Seeding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Seeding {
    type Err = Error;

    /// Space- or comma-separated player ids.
    fn from_str(s: &str) -> Result<Self> {
        let order = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|tok| !tok.is_empty())
            .map(|tok| {
                tok.parse::<Player>()
                    .map_err(|_| Error::InvalidSeeding(format!("bad player id {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(order)
    }
}

/// One played match.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Match {
    pub winner: Player,
    pub loser: Player,
}

impl Match {
    pub fn new(winner: Player, loser: Player) -> Self {
        Self { winner, loser }
    }
}

impl fmt::Display for Match {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.winner, self.loser)
    }
}

/// Per-round match sets, round 1 first.
pub type MatchSets = Vec<Vec<Match>>;

/// Everything that happens when a bracket is played out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnockoutTrace {
    rounds: MatchSets,
    survivors: Vec<Vec<Player>>,
    losers: Vec<Vec<Player>>,
    champion: Player,
}

impl KnockoutTrace {
    fn from_rounds(players: &[Player], rounds: MatchSets, champion: Player) -> Self {
        let mut survivors = Vec::with_capacity(rounds.len() + 1);
        let mut initial = players.to_vec();
        initial.sort_unstable();
        survivors.push(initial);
        let mut losers = Vec::with_capacity(rounds.len());
        for round in &rounds {
            let mut w: Vec<_> = round.iter().map(|m| m.winner).collect();
            let mut l: Vec<_> = round.iter().map(|m| m.loser).collect();
            w.sort_unstable();
            l.sort_unstable();
            survivors.push(w);
            losers.push(l);
        }
        Self {
            rounds,
            survivors,
            losers,
            champion,
        }
    }

    /// Match sets `M_1..M_{log n}`, each in bracket order.
    pub fn rounds(&self) -> &MatchSets {
        &self.rounds
    }

    pub fn num_rounds(&self) -> usize {
        self.rounds.len()
    }

    /// `C_r`, the players still in after round `r` (`C_0` is everyone). Sorted.
    pub fn survivors(&self, r: usize) -> &[Player] {
        &self.survivors[r]
    }

    /// `L_r` for `r >= 1`, the players knocked out in round `r`. Sorted.
    pub fn losers(&self, r: usize) -> &[Player] {
        &self.losers[r - 1]
    }

    pub fn champion(&self) -> Player {
        self.champion
    }

    /// Every arc played, in round order.
    pub fn arcs(&self) -> impl Iterator<Item = Match> + '_ {
        self.rounds.iter().flatten().copied()
    }
}

impl fmt::Display for KnockoutTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, round) in self.rounds.iter().enumerate() {
            write!(f, "round {}:", r + 1)?;
            for m in round {
                write!(f, " {m}")?;
            }
            writeln!(f)?;
        }
        writeln!(f, "champion: {}", self.champion)
    }
}

/// Plays a bracket whose leaves are `leaves` (length a power of two).
pub(crate) fn play_bracket(t: &Tournament, leaves: &[Player]) -> (MatchSets, Player) {
    debug_assert!(leaves.len().is_power_of_two());
    let mut alive = leaves.to_vec();
    let mut rounds = Vec::with_capacity(leaves.len().trailing_zeros() as usize);
    while alive.len() > 1 {
        let round: Vec<Match> = alive
            .chunks_exact(2)
            .map(|pair| {
                let w = t.winner(pair[0], pair[1]);
                let l = if w == pair[0] { pair[1] } else { pair[0] };
                Match::new(w, l)
            })
            .collect();
        alive = round.iter().map(|m| m.winner).collect();
        rounds.push(round);
    }
    (rounds, alive[0])
}

/// Plays the bracket induced by `s` on `t`.
pub fn simulate(t: &Tournament, s: &Seeding) -> KnockoutTrace {
    assert_eq!(
        s.len(),
        t.n(),
        "seeding size does not match tournament size"
    );
    let (rounds, champion) = play_bracket(t, s.leaf_order());
    KnockoutTrace::from_rounds(s.leaf_order(), rounds, champion)
}

/// Plays an arbitrary sub-bracket over `leaves`, returning its trace.
pub fn simulate_subset(t: &Tournament, leaves: &[Player]) -> Result<KnockoutTrace> {
    if !leaves.len().is_power_of_two() {
        return Err(Error::Precondition(format!(
            "sub-bracket of {} players is not a power of two",
            leaves.len()
        )));
    }
    if leaves.iter().any(|&p| p >= t.n()) {
        return Err(Error::Precondition(
            "sub-bracket player out of range".into(),
        ));
    }
    let (rounds, champion) = play_bracket(t, leaves);
    Ok(KnockoutTrace::from_rounds(leaves, rounds, champion))
}

/// Checks both validity conditions of a match set sequence against `t`:
/// every match is an arc of `t`, round 1 covers all players exactly once,
/// and the winners of each round are exactly the players of the next.
pub fn validate_match_sequence(t: &Tournament, rounds: &[Vec<Match>]) -> bool {
    let n = t.n();
    if rounds.len() != t.rounds() {
        return false;
    }
    let mut expected: BTreeSet<Player> = (0..n).collect();
    for (r, round) in rounds.iter().enumerate() {
        if round.len() != n >> (r + 1) {
            return false;
        }
        let mut players = BTreeSet::new();
        for m in round {
            if m.winner >= n || m.loser >= n || !t.beats(m.winner, m.loser) {
                return false;
            }
            if !players.insert(m.winner) || !players.insert(m.loser) {
                return false;
            }
        }
        if players != expected {
            return false;
        }
        expected = round.iter().map(|m| m.winner).collect();
    }
    true
}

/// Rebuilds a seeding that reproduces `rounds`, placing every match winner's
/// sub-bracket to the left of the loser's.
pub fn seeding_from_sequence(t: &Tournament, rounds: &[Vec<Match>]) -> Result<Seeding> {
    if !validate_match_sequence(t, rounds) {
        return Err(Error::InvalidSequence(
            "sequence is not valid for this tournament".into(),
        ));
    }
    if rounds.is_empty() {
        return Seeding::identity(t.n());
    }
    let opponent: Vec<HashMap<Player, Player>> = rounds
        .iter()
        .map(|round| round.iter().map(|m| (m.winner, m.loser)).collect())
        .collect();

    fn place(opponent: &[HashMap<Player, Player>], p: Player, r: usize, out: &mut Vec<Player>) {
        if r == 0 {
            out.push(p);
            return;
        }
        let loser = opponent[r - 1][&p];
        place(opponent, p, r - 1, out);
        place(opponent, loser, r - 1, out);
    }

    let champion = rounds[rounds.len() - 1][0].winner;
    let mut order = Vec::with_capacity(t.n());
    place(&opponent, champion, rounds.len(), &mut order);
    Seeding::new(order)
}

/// Per-round match sets with each round sorted, for set comparisons.
pub fn canonical_rounds(rounds: &[Vec<Match>]) -> MatchSets {
    rounds
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.sort_unstable();
            r
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn t4_yes() -> Tournament {
        Tournament::from_rows(&["0101", "0011", "1000", "0010"], 0).unwrap()
    }

    #[test]
    fn smallest_instance() {
        let t = Tournament::parse("TFP v1\nn=2 vstar=0\n01\n00\n").unwrap();
        assert_eq!((t.n(), t.k(), t.ell()), (2, 0, 1));
        let trace = simulate(&t, &Seeding::new(vec![0, 1]).unwrap());
        assert_eq!(trace.champion(), 0);
        assert_eq!(trace.rounds(), &vec![vec![Match::new(0, 1)]]);
    }

    #[test]
    fn single_player_has_no_rounds() {
        let t = Tournament::parse("TFP v1\nn=1 vstar=0\n0\n").unwrap();
        let trace = simulate(&t, &Seeding::identity(1).unwrap());
        assert_eq!(trace.num_rounds(), 0);
        assert_eq!(trace.champion(), 0);
        assert!(validate_match_sequence(&t, &[]));
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = Tournament::parse("TFP v1\nn=3 vstar=0\n011\n001\n000\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::NotPowerOfTwo(3));
        assert_eq!((err.line, err.column), (2, 1));
        assert!(err.to_string().contains("n not a power of two"));

        let err = Tournament::parse("TFP v1\nn=2 vstar=0\n01\n10\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::Antisymmetry { u: 0, v: 1 });
        assert_eq!((err.line, err.column), (4, 1));

        let err = Tournament::parse("TFP v1\nn=2 vstar=0\n0x\n00\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::BadCell('x'));
        assert_eq!((err.line, err.column), (3, 2));

        let err = Tournament::parse("TFP v1\nn=2 vstar=0\n11\n00\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::Diagonal(0));

        let err = Tournament::parse("TFP v1\nn=2 vstar=5\n01\n00\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::VstarOutOfRange { vstar: 5, n: 2 });
        assert_eq!(err.column, 5);

        let err = Tournament::parse("TFP v2\nn=2 vstar=0\n01\n00\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::MissingMagic);

        let err = Tournament::parse("TFP v1\nn=2\n01\n00\n").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::MalformedHeader(_)));

        let err = Tournament::parse("TFP v1\nn=2 vstar=0\n01\n").unwrap_err();
        assert_eq!(
            err.kind,
            ParseErrorKind::MissingRows {
                expected: 2,
                found: 1
            }
        );

        let err = Tournament::parse("TFP v1\nn=2 vstar=0\n010\n00\n").unwrap_err();
        assert_eq!(
            err.kind,
            ParseErrorKind::RowLength {
                expected: 2,
                found: 3
            }
        );
    }

    #[test]
    fn comments_are_skipped_and_output_round_trips() {
        let text = "# hello\nTFP v1\n# size\nn=4 vstar=0\n0101\n0011\n# mid\n1000\n0010\n";
        let t = Tournament::parse(text).unwrap();
        assert_eq!(t, t4_yes());
        assert_eq!(Tournament::parse(&t.to_tfp_string()).unwrap(), t);
    }

    #[test]
    fn t4_yes_identity_trace() {
        let t = t4_yes();
        assert_eq!(t.in_neighbors(), vec![2]);
        assert_eq!(t.out_neighbors(), vec![1, 3]);
        let trace = simulate(&t, &Seeding::identity(4).unwrap());
        assert_eq!(trace.rounds()[0], vec![Match::new(0, 1), Match::new(3, 2)]);
        assert_eq!(trace.rounds()[1], vec![Match::new(0, 3)]);
        assert_eq!(trace.champion(), 0);
        assert_eq!(trace.losers(1), &[1, 2]);
        assert_eq!(trace.survivors(1), &[0, 3]);
        assert_eq!(
            trace.to_string(),
            "round 1: (0,1) (3,2)\nround 2: (0,3)\nchampion: 0\n"
        );
    }

    #[test]
    fn t4_yes_other_seeding() {
        // 2 knocks out 0, 1 knocks out 3, then 1 beats 2.
        let t = t4_yes();
        let trace = simulate(&t, &Seeding::new(vec![0, 2, 1, 3]).unwrap());
        assert_eq!(trace.rounds()[0], vec![Match::new(2, 0), Match::new(1, 3)]);
        assert_eq!(trace.rounds()[1], vec![Match::new(1, 2)]);
        assert_eq!(trace.champion(), 1);
    }

    #[test]
    fn validation_rejects_bad_sequences() {
        let t = t4_yes();
        let good = simulate(&t, &Seeding::identity(4).unwrap())
            .rounds()
            .clone();
        assert!(validate_match_sequence(&t, &good));

        let mut missing_arc = good.clone();
        missing_arc[0][1] = Match::new(2, 3);
        assert!(!validate_match_sequence(&t, &missing_arc));

        let reappears = vec![
            vec![Match::new(0, 1), Match::new(3, 2)],
            vec![Match::new(0, 1)],
        ];
        assert!(!validate_match_sequence(&t, &reappears));

        assert!(!validate_match_sequence(&t, &good[..1]));
    }

    #[test]
    fn seeding_from_sequence_examples() {
        let t2 = Tournament::from_rows(&["01", "00"], 0).unwrap();
        let s = seeding_from_sequence(&t2, &[vec![Match::new(0, 1)]]).unwrap();
        assert_eq!(s.leaf_order(), &[0, 1]);

        let t = t4_yes();
        let seq = vec![
            vec![Match::new(0, 1), Match::new(3, 2)],
            vec![Match::new(0, 3)],
        ];
        let s = seeding_from_sequence(&t, &seq).unwrap();
        assert_eq!(s.leaf_order(), &[0, 1, 3, 2]);
        assert_eq!(
            canonical_rounds(simulate(&t, &s).rounds()),
            canonical_rounds(&seq)
        );
    }

    #[test]
    fn seeding_parsing() {
        let s: Seeding = "0 2, 1 3".parse().unwrap();
        assert_eq!(s.leaf_order(), &[0, 2, 1, 3]);
        assert_eq!(s.to_string(), "0 2 1 3");
        assert!("0 0 1 2".parse::<Seeding>().is_err());
        assert!("0 1 2".parse::<Seeding>().is_err());
    }
}
