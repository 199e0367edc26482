//! HTTP front end for realization and drill sessions.
//!
//! | route | body | reply |
//! |---|---|---|
//! | `POST /realize` | `{tree}` | `{text, warnings}` |
//! | `POST /drill/new` | `{direction, level, seed?}` | `{session_id, source_text, tokens}` |
//! | `POST /drill/check` | `{session_id, answer}` | `{correct, expected, next_allowed, attempts}` |
//! | `GET /health` | | `{status, lexicon_counts}` |
//!
//! Errors come back as `{"error": ..., "path"?: ...}` with status 400 or 404.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};
use std::time::Duration;

use axum::body::Bytes;
use axum::extract::State;
use axum::http::{HeaderValue, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use birealize::drill::{check_answer, Direction, Exercise, PatternSet, MAX_LEVEL};
use birealize::features::Language;
use birealize::interchange::tree_from_value;
use birealize::{Engine, Warning};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use tokio::net::TcpListener;
use tokio::time::Instant;
use tower_http::cors::{AllowOrigin, CorsLayer};

pub const DEFAULT_TTL: Duration = Duration::from_secs(30 * 60);
pub const PORT_VAR: &str = "BIREALIZE_PORT";
pub const DEFAULT_PORT: u16 = 8080;

#[derive(Debug, Clone)]
pub struct Config {
    /// idle time after which a session is dropped
    pub ttl: Duration,
    /// origin allowed by CORS; any origin when unset
    pub allow_origin: Option<HeaderValue>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            ttl: DEFAULT_TTL,
            allow_origin: None,
        }
    }
}

struct Session {
    exercise: Exercise,
    last_used: Instant,
    attempts: u32,
}

/// Shared server state. The engine and patterns are read-only once built.
#[derive(Clone)]
pub struct AppState {
    engine: Arc<Engine>,
    patterns: Arc<PatternSet>,
    sessions: Arc<Mutex<HashMap<String, Arc<tokio::sync::Mutex<Session>>>>>,
    ttl: Duration,
}

impl AppState {
    pub fn new(engine: Engine, patterns: PatternSet, ttl: Duration) -> Self {
        AppState {
            engine: Arc::new(engine),
            patterns: Arc::new(patterns),
            sessions: Arc::default(),
            ttl,
        }
    }

    pub fn session_count(&self) -> usize {
        self.sessions.lock().expect("session map poisoned").len()
    }

    fn evict_expired(&self, now: Instant) {
        let ttl = self.ttl;
        self.sessions
            .lock()
            .expect("session map poisoned")
            .retain(|_, s| {
                s.try_lock()
                    .map_or(true, |s| now.duration_since(s.last_used) < ttl)
            });
    }
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    message: String,
    path: Option<String>,
}

impl ApiError {
    fn bad_request(message: impl Into<String>) -> Self {
        ApiError {
            status: StatusCode::BAD_REQUEST,
            message: message.into(),
            path: None,
        }
    }

    fn not_found(message: impl Into<String>) -> Self {
        ApiError {
            status: StatusCode::NOT_FOUND,
            message: message.into(),
            path: None,
        }
    }
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    error: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    path: Option<&'a str>,
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let body = ErrorBody {
            error: &self.message,
            path: self.path.as_deref(),
        };
        (self.status, Json(body)).into_response()
    }
}

fn body<T: DeserializeOwned>(bytes: &Bytes) -> Result<T, ApiError> {
    serde_json::from_slice(bytes).map_err(|e| ApiError::bad_request(format!("invalid request body: {e}")))
}

#[derive(Deserialize)]
struct RealizeRequest {
    tree: Value,
}

#[derive(Serialize)]
struct RealizeResponse {
    text: String,
    warnings: Vec<WarningBody>,
}

#[derive(Serialize)]
struct WarningBody {
    code: String,
    lemma: String,
    message: String,
}

impl From<&Warning> for WarningBody {
    fn from(w: &Warning) -> Self {
        WarningBody {
            code: format!("{:?}", w.code),
            lemma: w.lemma.clone(),
            message: w.message(),
        }
    }
}

async fn realize(State(state): State<AppState>, bytes: Bytes) -> Result<Json<RealizeResponse>, ApiError> {
    let req: RealizeRequest = body(&bytes)?;
    let tree = tree_from_value(&req.tree).map_err(|e| ApiError {
        status: StatusCode::BAD_REQUEST,
        message: e.to_string(),
        path: e.path().map(|p| p.replacen('$', "$.tree", 1)),
    })?;
    let r = state.engine.realize(&tree);
    Ok(Json(RealizeResponse {
        warnings: r.warnings.iter().map(WarningBody::from).collect(),
        text: r.text,
    }))
}

#[derive(Deserialize)]
struct NewRequest {
    direction: String,
    level: i64,
    seed: Option<u64>,
}

#[derive(Serialize)]
struct NewResponse {
    session_id: String,
    source_text: String,
    tokens: Vec<String>,
}

async fn drill_new(State(state): State<AppState>, bytes: Bytes) -> Result<Json<NewResponse>, ApiError> {
    let req: NewRequest = body(&bytes)?;
    let direction: Direction = req.direction.parse().map_err(|_| {
        ApiError::bad_request(format!(
            "direction must be fr-en or en-fr, not {:?}",
            req.direction
        ))
    })?;
    let level = u8::try_from(req.level)
        .ok()
        .filter(|l| *l <= MAX_LEVEL)
        .ok_or_else(|| ApiError::bad_request(format!("level must be between 0 and {MAX_LEVEL}")))?;
    let seed = req.seed.unwrap_or_else(rand::random);
    let exercise = state
        .patterns
        .exercise(&state.engine, direction, level, seed)
        .map_err(|e| ApiError {
            status: StatusCode::INTERNAL_SERVER_ERROR,
            message: e.to_string(),
            path: None,
        })?;

    let now = Instant::now();
    state.evict_expired(now);
    let session_id = format!("{:032x}", rand::random::<u128>());
    let reply = NewResponse {
        session_id: session_id.clone(),
        source_text: exercise.source_text.clone(),
        tokens: exercise.tokens.clone(),
    };
    let session = Session {
        exercise,
        last_used: now,
        attempts: 0,
    };
    state
        .sessions
        .lock()
        .expect("session map poisoned")
        .insert(session_id, Arc::new(tokio::sync::Mutex::new(session)));
    tracing::debug!(%direction, level, seed, "new drill session");
    Ok(Json(reply))
}

#[derive(Deserialize)]
struct CheckRequest {
    session_id: String,
    answer: String,
}

#[derive(Serialize)]
struct CheckResponse {
    correct: bool,
    expected: String,
    next_allowed: bool,
    attempts: u32,
}

async fn drill_check(State(state): State<AppState>, bytes: Bytes) -> Result<Json<CheckResponse>, ApiError> {
    let req: CheckRequest = body(&bytes)?;
    let unknown = || ApiError::not_found(format!("no session {}", req.session_id));
    let session = state
        .sessions
        .lock()
        .expect("session map poisoned")
        .get(&req.session_id)
        .cloned()
        .ok_or_else(unknown)?;
    let mut s = session.lock().await;
    let now = Instant::now();
    if now.duration_since(s.last_used) >= state.ttl {
        drop(s);
        state
            .sessions
            .lock()
            .expect("session map poisoned")
            .remove(&req.session_id);
        return Err(unknown());
    }
    s.last_used = now;
    s.attempts += 1;
    let verdict = check_answer(&s.exercise, &req.answer);
    Ok(Json(CheckResponse {
        correct: verdict.correct,
        expected: verdict.expected,
        next_allowed: true,
        attempts: s.attempts,
    }))
}

#[derive(Serialize)]
struct Health {
    status: &'static str,
    lexicon_counts: BTreeMap<&'static str, usize>,
}

async fn health(State(state): State<AppState>) -> Json<Health> {
    Json(Health {
        status: "ok",
        lexicon_counts: Language::ALL
            .iter()
            .map(|l| (l.code(), state.engine.lexicon(*l).len()))
            .collect(),
    })
}

pub fn router(state: AppState, config: &Config) -> Router {
    let origin = match &config.allow_origin {
        Some(o) => AllowOrigin::exact(o.clone()),
        None => AllowOrigin::any(),
    };
    let cors = CorsLayer::new()
        .allow_origin(origin)
        .allow_methods([axum::http::Method::GET, axum::http::Method::POST])
        .allow_headers([axum::http::header::CONTENT_TYPE]);
    Router::new()
        .route("/realize", post(realize))
        .route("/drill/new", post(drill_new))
        .route("/drill/check", post(drill_check))
        .route("/health", get(health))
        .layer(cors)
        .with_state(state)
}

/// Serves until the listener fails, sweeping idle sessions once a minute.
pub async fn serve(listener: TcpListener, state: AppState, config: Config) -> std::io::Result<()> {
    let sweeper = state.clone();
    tokio::spawn(async move {
        let mut tick = tokio::time::interval(Duration::from_secs(60));
        loop {
            tick.tick().await;
            sweeper.evict_expired(Instant::now());
        }
    });
    tracing::info!(addr = %listener.local_addr()?, "listening");
    axum::serve(listener, router(state, &config)).await
}
