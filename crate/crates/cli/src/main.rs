use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use graev_core::quniform::{ChainEntry, ChainFile};
use graev_core::schemes::{enumerate_schemes_capped, DEFAULT_SCHEME_CAP};
use graev_core::{
    abelian_norm, format_rational, frink_qpm, graev_norm_free, lemma5_check, parse_rational, universal_base,
    v_rho_member, wn_member, wp_member, AbelianWord, Alphabet, Caps, Entourage, EntourageSequence, FiniteSpace,
    FrinkTail, Generator, GroupElement, QPSpace, WMembership, Word,
};

/// Exact Graev-type norms and distances on free and free abelian groups over
/// finite quasi-pseudometric spaces.
#[derive(Parser, Debug)]
#[command(name = "graev", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the quasi-pseudometric axioms of a space file
    Validate {
        #[arg(long)]
        space: PathBuf,
        /// Also require every distance to be at most 1
        #[arg(long)]
        bounded: bool,
    },
    /// Norm of an element: N_ρ(g) on the free group, d̂_A(e, g) with --abelian
    Norm {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        abelian: bool,
        /// Print a minimizing witness on a second line
        #[arg(long)]
        witness: bool,
    },
    /// Distance from one element to another
    Dist {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
        #[arg(long)]
        abelian: bool,
        #[arg(long)]
        witness: bool,
    },
    /// Whether the norm of an element is below ε
    Member {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        eps: String,
        #[arg(long)]
        abelian: bool,
    },
    /// List every scheme on {1..2n}
    Schemes {
        #[arg(long)]
        n: usize,
        /// Largest n accepted
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Quasi-pseudometric of an entourage chain V_1 ⊇ V_2 ⊇ ⋯, as a space file
    Frink {
        #[arg(long)]
        chain: PathBuf,
        /// Treat the last entourage as repeating forever (must be transitive)
        #[arg(long)]
        stationary: bool,
    },
    /// Check U_{k_1}∘⋯∘U_{k_p} ⊆ U_k on a chain U_0, U_1, …
    Lemma5 {
        #[arg(long)]
        chain: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        ks: Vec<usize>,
    },
    /// Universal base entourage of a finite T0 topology
    Ubase {
        #[arg(long)]
        topology: PathBuf,
    },
    /// Membership in W(P) (pairs from U_1..U_k in order) or W_n(P) with --n
    Wmember {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        seq: PathBuf,
        #[arg(long, conflicts_with = "kmax")]
        n: Option<usize>,
        #[arg(long)]
        kmax: Option<usize>,
    },
}

#[derive(Args, Debug)]
struct SpaceArgs {
    #[arg(long)]
    space: PathBuf,
    /// Override the search cap (free reduced length or abelian letter count)
    #[arg(long)]
    cap: Option<usize>,
    /// Replace ρ by min(ρ, 1) instead of rejecting unbounded spaces
    #[arg(long)]
    cap_at_one: bool,
}

impl SpaceArgs {
    fn load(&self) -> Result<QPSpace> {
        let (space, _) = load_space(&self.space)?;
        Ok(if self.cap_at_one { space.cap_at_one() } else { space })
    }

    fn caps(&self) -> Caps {
        let mut caps = Caps::default();
        if let Some(c) = self.cap {
            caps.free_reduced_len = c;
            caps.abelian_letters = c;
        }
        caps
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_space(path: &Path) -> Result<(QPSpace, bool)> {
    Ok(QPSpace::from_json(&read(path)?)?)
}

/// Entries given as paths are resolved against the chain file's directory.
fn load_chain(path: &Path) -> Result<EntourageSequence> {
    let file = ChainFile::from_json(&read(path)?)?;
    let dir = path.parent().unwrap_or(Path::new("."));
    let entourages = file
        .entourages
        .into_iter()
        .map(|entry| match entry {
            ChainEntry::Inline(e) => Ok(e.into_entourage()?),
            ChainEntry::Path(p) => Ok(Entourage::from_json(&read(&dir.join(p))?)?),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EntourageSequence::new(entourages)?)
}

fn pair_list(points: &Alphabet, pairs: impl Iterator<Item = (Generator, Generator)>) -> String {
    pairs.map(|(x, y)| format!("({},{})", points.name(x), points.name(y))).collect()
}

fn parse_element(text: &str, points: &Alphabet, abelian: bool) -> Result<GroupElement> {
    Ok(if abelian {
        GroupElement::Abelian(AbelianWord::parse(text, points)?)
    } else {
        GroupElement::Free(Word::parse(text, points)?)
    })
}

fn norm_lines(space: &QPSpace, g: &GroupElement, witness: bool, caps: &Caps) -> Result<Vec<String>> {
    let points = space.points();
    let (value, shown) = match g {
        GroupElement::Abelian(h) => {
            let (v, w) = abelian_norm(space, h, caps)?;
            let shown = w.display(points).to_string();
            (v, shown)
        }
        GroupElement::Free(w) => {
            let (v, wit) = graev_norm_free(space, w, caps)?;
            let shown = wit.display(points).to_string();
            (v, shown)
        }
    };
    let mut out = vec![format_rational(&value)];
    if witness {
        out.push(shown);
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<Vec<String>> {
    match cli.command {
        Command::Validate { space, bounded } => {
            let (sp, flagged) = load_space(&space)?;
            let report = sp.validate(bounded || flagged);
            if report.is_valid() {
                Ok(vec!["valid".into()])
            } else {
                bail!("invalid space\n{}", report.render(&sp))
            }
        }
        Command::Norm { space, word, abelian, witness } => {
            let sp = space.load()?;
            let g = parse_element(&word, sp.points(), abelian)?;
            norm_lines(&sp, &g, witness, &space.caps())
        }
        Command::Dist { space, from, to, abelian, witness } => {
            let sp = space.load()?;
            // ρ̂(g, h) = N(g⁻¹h) and d̂_A(g, h) = d̂_A(e, h − g)
            let diff = match (parse_element(&from, sp.points(), abelian)?, parse_element(&to, sp.points(), abelian)?) {
                (GroupElement::Free(g), GroupElement::Free(h)) => GroupElement::Free(g.inverse().product(&h)),
                (GroupElement::Abelian(g), GroupElement::Abelian(h)) => GroupElement::Abelian(h.sub(&g)),
                _ => unreachable!("both sides parsed in the same group"),
            };
            norm_lines(&sp, &diff, witness, &space.caps())
        }
        Command::Member { space, word, eps, abelian } => {
            let sp = space.load()?;
            let eps = parse_rational(&eps)?;
            let g = parse_element(&word, sp.points(), abelian)?;
            Ok(vec![v_rho_member(&sp, &g, &eps, &space.caps())?.to_string()])
        }
        Command::Schemes { n, cap } => {
            let schemes = enumerate_schemes_capped(n, cap.unwrap_or(DEFAULT_SCHEME_CAP))?;
            let mut out: Vec<String> = schemes.iter().map(|s| s.to_string()).collect();
            out.push(format!("count: {}", schemes.len()));
            Ok(out)
        }
        Command::Frink { chain, stationary } => {
            let seq = load_chain(&chain)?;
            let tail = if stationary { FrinkTail::Stationary } else { FrinkTail::Truncated };
            Ok(vec![frink_qpm(&seq, tail)?.to_json(Some(true))])
        }
        Command::Lemma5 { chain, k, ks } => {
            let seq = load_chain(&chain)?;
            Ok(vec![lemma5_check(&seq, k, &ks)?.to_string()])
        }
        Command::Ubase { topology } => {
            let space = FiniteSpace::from_json(&read(&topology)?)?;
            Ok(vec![universal_base(&space)?.to_json()])
        }
        Command::Wmember { word, seq, n, kmax } => {
            let seq = load_chain(&seq)?;
            let points = seq.points().clone();
            let g = AbelianWord::parse(&word, &points)?;
            if let Some(n) = n {
                return Ok(vec![match wn_member(&g, &seq, n)? {
                    Some(w) => {
                        let pairs: Vec<String> = w
                            .iter()
                            .map(|&(i, x, y)| format!("U{}:({},{})", i + 1, points.name(x), points.name(y)))
                            .collect();
                        format!("true pairs={}", if pairs.is_empty() { "()".into() } else { pairs.join(" ") })
                    }
                    None => "false".into(),
                }]);
            }
            let kmax = kmax.unwrap_or(seq.len());
            Ok(vec![match wp_member(&g, &seq, kmax)? {
                WMembership::Member { k, pairs } => {
                    format!("member k={k} pairs={}", pair_list(&points, pairs.into_iter()))
                }
                WMembership::NotFoundWithinBound => format!("not found with k <= {kmax}"),
            }])
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(lines) => {
            for line in lines {
                println!("{line}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            let resource = e.downcast_ref::<graev_core::Error>().is_some_and(|e| e.is_resource());
            ExitCode::from(if resource { 2 } else { 1 })
        }
    }
}
