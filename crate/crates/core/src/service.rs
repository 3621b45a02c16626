//! HTTP JSON service for playing the puzzle.
//!
//! Endpoints:
//!
//! - `GET /designs` lists the catalog.
//! - `POST /session` with `{"design": name-or-design, "home": k}` opens a session.
//! - `GET /session/{id}` returns its state.
//! - `POST /session/{id}/move` with `{"point": b}` moves the hole to `b`.
//! - `POST /session/{id}/undo` takes back the last move.
//! - `GET /session/{id}/preview?point=b` shows the state a move would produce.
//!
//! Unknown sessions answer 404 and non-collinear moves 409, both with a JSON
//! body `{"error", "message"}`.

use std::collections::HashMap;
use std::net::SocketAddr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use axum::extract::{Path, Query, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::Deserialize;
use serde_json::json;

use crate::catalog;
use crate::designs::Hypergraph;
use crate::error::Error;
use crate::groupoid::{build_groupoid, ConwayGroupoid};
use crate::session::{PuzzleSession, SessionState};

/// Sessions plus the groupoids they share. Groupoids are immutable once built.
#[derive(Default)]
pub struct AppState {
    sessions: Mutex<HashMap<String, PuzzleSession>>,
    groupoids: Mutex<HashMap<(String, usize), Arc<ConwayGroupoid>>>,
    next_id: AtomicU64,
}

impl AppState {
    pub fn new() -> Arc<Self> {
        Arc::new(AppState::default())
    }

    fn groupoid(&self, h: &Hypergraph, home: usize) -> Result<Arc<ConwayGroupoid>, ApiError> {
        let key = (h.to_json(), home);
        if let Some(g) = self.groupoids.lock().expect("lock").get(&key) {
            return Ok(g.clone());
        }
        let g = Arc::new(build_groupoid(h, home).map_err(ApiError::bad_request)?);
        self.groupoids.lock().expect("lock").insert(key, g.clone());
        Ok(g)
    }

    fn with_session<T>(
        &self,
        id: &str,
        f: impl FnOnce(&mut PuzzleSession) -> Result<T, ApiError>,
    ) -> Result<T, ApiError> {
        let mut sessions = self.sessions.lock().expect("lock");
        let s = sessions.get_mut(id).ok_or_else(|| ApiError {
            status: StatusCode::NOT_FOUND,
            error: "unknown-session",
            message: format!("no session {id:?}"),
        })?;
        f(s)
    }
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    error: &'static str,
    message: String,
}

impl ApiError {
    fn bad_request(e: Error) -> Self {
        ApiError {
            status: StatusCode::BAD_REQUEST,
            error: "bad-request",
            message: e.to_string(),
        }
    }

    fn from_move(e: Error) -> Self {
        match e {
            Error::NonCollinear { a, b } => ApiError {
                status: StatusCode::CONFLICT,
                error: "not-collinear",
                message: format!(
                    "the hole is at {a} and no line contains both {a} and {b}; legal moves go to points collinear with the hole"
                ),
            },
            other => ApiError::bad_request(other),
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let body = Json(json!({ "error": self.error, "message": self.message }));
        (self.status, body).into_response()
    }
}

/// A catalog name or an inline design.
#[derive(Deserialize)]
#[serde(untagged)]
pub enum DesignArg {
    Name(String),
    Inline(Hypergraph),
}

#[derive(Deserialize)]
pub struct NewSession {
    pub design: DesignArg,
    #[serde(default)]
    pub home: usize,
}

#[derive(Deserialize)]
pub struct MoveRequest {
    pub point: usize,
}

async fn designs() -> Json<serde_json::Value> {
    Json(json!({ "designs": catalog::list() }))
}

async fn create(
    State(app): State<Arc<AppState>>,
    Json(req): Json<NewSession>,
) -> Result<(StatusCode, Json<SessionState>), ApiError> {
    let h = match req.design {
        DesignArg::Name(name) => catalog::design(&name).map_err(ApiError::bad_request)?,
        DesignArg::Inline(h) => h,
    };
    if req.home >= h.n() {
        return Err(ApiError::bad_request(Error::InvalidArgument(format!(
            "home {} is not in 0..{}",
            req.home,
            h.n()
        ))));
    }
    let app2 = app.clone();
    let g = tokio::task::spawn_blocking(move || app2.groupoid(&h, req.home))
        .await
        .expect("groupoid task")?;
    let id = format!("s{}", app.next_id.fetch_add(1, Ordering::Relaxed) + 1);
    let session = PuzzleSession::new(id.clone(), g);
    let state = session.state();
    app.sessions.lock().expect("lock").insert(id, session);
    Ok((StatusCode::CREATED, Json(state)))
}

async fn show(
    State(app): State<Arc<AppState>>,
    Path(id): Path<String>,
) -> Result<Json<SessionState>, ApiError> {
    app.with_session(&id, |s| Ok(Json(s.state())))
}

async fn apply(
    State(app): State<Arc<AppState>>,
    Path(id): Path<String>,
    Json(req): Json<MoveRequest>,
) -> Result<Json<SessionState>, ApiError> {
    app.with_session(&id, |s| s.apply(req.point).map(Json).map_err(ApiError::from_move))
}

async fn undo(
    State(app): State<Arc<AppState>>,
    Path(id): Path<String>,
) -> Result<Json<SessionState>, ApiError> {
    app.with_session(&id, |s| {
        s.undo();
        Ok(Json(s.state()))
    })
}

async fn preview(
    State(app): State<Arc<AppState>>,
    Path(id): Path<String>,
    Query(req): Query<MoveRequest>,
) -> Result<Json<SessionState>, ApiError> {
    app.with_session(&id, |s| s.preview(req.point).map(Json).map_err(ApiError::from_move))
}

pub fn router(app: Arc<AppState>) -> Router {
    Router::new()
        .route("/designs", get(designs))
        .route("/session", post(create))
        .route("/session/:id", get(show))
        .route("/session/:id/move", post(apply))
        .route("/session/:id/undo", post(undo))
        .route("/session/:id/preview", get(preview))
        .with_state(app)
}

/// Serves on `127.0.0.1:port` until the process is stopped.
pub async fn serve(port: u16) -> std::io::Result<()> {
    let addr = SocketAddr::from(([127, 0, 0, 1], port));
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(AppState::new())).await
}
