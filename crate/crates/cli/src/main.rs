use std::io::{self, Write};
use std::net::SocketAddr;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use birealize::drill::{run_console, Direction, PatternSet, MAX_LEVEL};
use birealize::features::{Gender, Language};
use birealize::interchange::parse_tree;
use birealize::lexicon::load_lexicon;
use birealize::report::{generate_report, register_participants, Event, Participant, ReportSpec, Style};
use birealize::Engine;
use birealize_service::{AppState, Config, DEFAULT_PORT, PORT_VAR};
use chrono::{NaiveDate, NaiveDateTime};
use clap::{Parser, Subcommand, ValueEnum};

const USAGE: u8 = 1;
const INPUT: u8 = 2;

#[derive(Parser)]
#[command(
    name = "birealize",
    version,
    about = "Bilingual English/French sentence realizer"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Realize a JSON tree document; warnings go to stderr.
    Realize { tree: PathBuf },
    /// Print a parallel report of who attended an event.
    Report(ReportArgs),
    /// Interactive translation drill on the terminal.
    Drill {
        #[arg(long, default_value = "fr")]
        source: Language,
        #[arg(long, default_value = "en")]
        target: Language,
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=MAX_LEVEL as i64))]
        level: u8,
        /// random when omitted
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Start the drill HTTP service.
    Serve {
        #[arg(long, env = PORT_VAR, default_value_t = DEFAULT_PORT)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: std::net::IpAddr,
        /// idle minutes before a session expires
        #[arg(long, default_value_t = 30)]
        ttl_minutes: u64,
        /// single origin allowed by CORS; any origin when omitted
        #[arg(long)]
        allow_origin: Option<String>,
    },
    /// Lexicon file utilities.
    Lexicon {
        #[command(subcommand)]
        command: LexiconCommand,
    },
}

#[derive(Subcommand)]
enum LexiconCommand {
    /// Validate a lexicon against its rules and print counts.
    Check {
        lexicon: PathBuf,
        rules: PathBuf,
        #[arg(long)]
        lang: Language,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Langs {
    Both,
    En,
    Fr,
}

#[derive(clap::Args)]
struct ReportArgs {
    /// comma-separated NAME:GENDER items, e.g. Alice:f,Bob:m
    #[arg(long, value_delimiter = ',', required = true, value_parser = participant)]
    participants: Vec<Participant>,
    #[arg(long, default_value = "assembly")]
    event_en: String,
    #[arg(long, default_value = "réunion")]
    event_fr: String,
    /// event date, YYYY-MM-DD or YYYY-MM-DDTHH:MM[:SS]
    #[arg(long, value_parser = date_time)]
    date: NaiveDateTime,
    /// reference day for the tense; the current local time when omitted
    #[arg(long, value_parser = date_time)]
    today: Option<NaiveDateTime>,
    #[arg(long, default_value = "word-table", value_parser = ["word-table", "interface"])]
    style: String,
    #[arg(long, value_enum, default_value_t = Langs::Both)]
    lang: Langs,
}

fn participant(s: &str) -> Result<Participant, String> {
    let (name, gender) = s.split_once(':').ok_or("expected NAME:GENDER")?;
    let gender: Gender = gender
        .parse()
        .map_err(|_| format!("gender must be m or f, not {gender:?}"))?;
    if name.is_empty() {
        return Err("empty name".into());
    }
    Ok(Participant::new(name, gender))
}

fn date_time(s: &str) -> Result<NaiveDateTime, String> {
    ["%Y-%m-%dT%H:%M:%S", "%Y-%m-%dT%H:%M", "%Y-%m-%d %H:%M"]
        .iter()
        .find_map(|f| NaiveDateTime::parse_from_str(s, f).ok())
        .or_else(|| {
            NaiveDate::parse_from_str(s, "%Y-%m-%d")
                .ok()?
                .and_hms_opt(0, 0, 0)
        })
        .ok_or_else(|| format!("not a date: {s:?}"))
}

struct Failure(u8, String);

fn input(message: impl ToString) -> Failure {
    Failure(INPUT, message.to_string())
}

fn engine() -> Result<Engine, Failure> {
    Engine::from_env().map_err(input)
}

fn realize(path: &PathBuf) -> Result<(), Failure> {
    let bytes = std::fs::read(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    let tree = parse_tree(&bytes).map_err(|e| input(format!("{}: {e}", path.display())))?;
    let r = engine()?.realize(&tree);
    for w in &r.warnings {
        eprintln!("warning: {}", w.message());
    }
    println!("{}", r.text);
    Ok(())
}

fn report(args: ReportArgs) -> Result<(), Failure> {
    let mut engine = engine()?;
    register_participants(&mut engine, &args.participants).map_err(input)?;
    let spec = ReportSpec {
        event: Event {
            en: args.event_en,
            fr: args.event_fr,
        },
        participants: args.participants,
        date: args.date,
        today: args.today.unwrap_or_else(|| chrono::Local::now().naive_local()),
    };
    let style: Style = args.style.parse().map_err(|e| Failure(USAGE, e))?;
    let langs: &[Language] = match args.lang {
        Langs::Both => &Language::ALL,
        Langs::En => &[Language::En],
        Langs::Fr => &[Language::Fr],
    };
    for lang in langs {
        let r = generate_report(&engine, &spec, style, *lang);
        for w in &r.warnings {
            eprintln!("warning: {}", w.message());
        }
        println!("{}", r.text);
    }
    Ok(())
}

fn drill(source: Language, target: Language, level: u8, seed: Option<u64>) -> Result<(), Failure> {
    let direction = Direction::new(source, target)
        .ok_or_else(|| Failure(USAGE, "source and target must be different languages".into()))?;
    let engine = engine()?;
    let seed = seed.unwrap_or_else(rand::random);
    let stdin = io::stdin();
    let mut stdout = io::stdout();
    run_console(
        &engine,
        &PatternSet::fixtures(),
        direction,
        level,
        seed,
        stdin.lock(),
        &mut stdout,
    )
    .map_err(input)?;
    stdout.flush().map_err(input)
}

fn serve(addr: SocketAddr, ttl: Duration, allow_origin: Option<String>) -> Result<(), Failure> {
    let allow_origin = allow_origin
        .map(|o| o.parse().map_err(|_| Failure(USAGE, format!("bad origin {o:?}"))))
        .transpose()?;
    let config = Config { ttl, allow_origin };
    let state = AppState::new(engine()?, PatternSet::fixtures(), ttl);
    tracing_subscriber::fmt().with_writer(io::stderr).init();
    let rt = tokio::runtime::Runtime::new().map_err(input)?;
    rt.block_on(async {
        let listener = tokio::net::TcpListener::bind(addr).await?;
        birealize_service::serve(listener, state, config).await
    })
    .map_err(input)
}

fn lexicon_check(lexicon: &PathBuf, rules: &PathBuf, lang: Language) -> Result<(), Failure> {
    let read = |p: &PathBuf| std::fs::read(p).map_err(|e| input(format!("{}: {e}", p.display())));
    let lex = load_lexicon(lang, &read(lexicon)?, &read(rules)?).map_err(input)?;
    println!("{} entries, {} tables", lex.len(), lex.rules().tables.len());
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Realize { tree } => realize(&tree),
        Command::Report(args) => report(args),
        Command::Drill {
            source,
            target,
            level,
            seed,
        } => drill(source, target, level, seed),
        Command::Serve {
            port,
            host,
            ttl_minutes,
            allow_origin,
        } => serve(
            SocketAddr::new(host, port),
            Duration::from_secs(ttl_minutes * 60),
            allow_origin,
        ),
        Command::Lexicon {
            command: LexiconCommand::Check { lexicon, rules, lang },
        } => lexicon_check(&lexicon, &rules, lang),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, message)) => {
            eprintln!("birealize: {message}");
            ExitCode::from(code)
        }
    }
}
