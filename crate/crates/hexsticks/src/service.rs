//! Local HTTP + JSON service for the hex editor.
//!
//! A registry task owns the id → session mapping. Each session lives on its
//! own thread and handles one command at a time, so writes to a session are
//! serialized while separate sessions proceed independently.
//!
//! Routes:
//! - `POST /api/sessions {path}` → `{id, length}`
//! - `GET /api/sessions/{id}/range?offset&length` → range view
//! - `PATCH /api/sessions/{id} {offset, value}` → `{dirty}`
//! - `POST /api/sessions/{id}/save` → `{dirty: false}`
//! - `GET /api/glyph/{byte}.svg` → ligature SVG, byte as two hex digits

use std::collections::HashMap;
use std::net::SocketAddr;
use std::path::PathBuf;

use axum::extract::rejection::{JsonRejection, QueryRejection};
use axum::extract::{Path, Query, State};
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, patch, post};
use axum::{Json, Router};
use hexsticks_core::svg::to_svg;
use hexsticks_core::{ligature_grid, ByteValue, StyleProfile};
use serde::Deserialize;
use serde_json::json;
use tokio::sync::{mpsc, oneshot};

use crate::session::{RangeView, Session, SessionError};

type Reply<T> = oneshot::Sender<Result<T, SessionError>>;

enum SessionCmd {
    Read {
        offset: u64,
        length: u64,
        reply: Reply<RangeView>,
    },
    Patch {
        offset: u64,
        value: u8,
        reply: Reply<bool>,
    },
    Save {
        reply: Reply<bool>,
    },
}

enum RegistryCmd {
    Open {
        path: PathBuf,
        reply: Reply<(String, u64)>,
    },
    Lookup {
        id: String,
        reply: oneshot::Sender<Option<mpsc::Sender<SessionCmd>>>,
    },
}

fn run_session(mut session: Session, mut rx: mpsc::Receiver<SessionCmd>) {
    while let Some(cmd) = rx.blocking_recv() {
        match cmd {
            SessionCmd::Read {
                offset,
                length,
                reply,
            } => {
                let _ = reply.send(session.read_range(offset, length));
            }
            SessionCmd::Patch {
                offset,
                value,
                reply,
            } => {
                let r = session.apply_patch(offset, value).map(|_| session.is_dirty());
                let _ = reply.send(r);
            }
            SessionCmd::Save { reply } => {
                let r = session.save().map(|_| session.is_dirty());
                let _ = reply.send(r);
            }
        }
    }
}

async fn run_registry(mut rx: mpsc::Receiver<RegistryCmd>) {
    let mut sessions: HashMap<String, mpsc::Sender<SessionCmd>> = HashMap::new();
    while let Some(cmd) = rx.recv().await {
        match cmd {
            RegistryCmd::Open { path, reply } => {
                let opened = tokio::task::spawn_blocking(move || Session::open(path))
                    .await
                    .expect("open task panicked");
                let result = opened.map(|session| {
                    let (id, length) = (session.id.clone(), session.len());
                    let (tx, srx) = mpsc::channel(64);
                    std::thread::spawn(move || run_session(session, srx));
                    sessions.insert(id.clone(), tx);
                    (id, length)
                });
                let _ = reply.send(result);
            }
            RegistryCmd::Lookup { id, reply } => {
                let _ = reply.send(sessions.get(&id).cloned());
            }
        }
    }
}

/// Cheap handle to the running service; clone freely.
#[derive(Clone)]
pub struct Editor {
    registry: mpsc::Sender<RegistryCmd>,
}

impl Editor {
    /// Starts the registry on the current tokio runtime.
    pub fn spawn() -> Editor {
        let (tx, rx) = mpsc::channel(64);
        tokio::spawn(run_registry(rx));
        Editor { registry: tx }
    }

    pub async fn open(&self, path: PathBuf) -> Result<(String, u64), SessionError> {
        let (reply, rx) = oneshot::channel();
        self.registry
            .send(RegistryCmd::Open { path, reply })
            .await
            .expect("registry running");
        rx.await.expect("registry replies")
    }

    async fn session(&self, id: &str) -> Result<mpsc::Sender<SessionCmd>, SessionError> {
        let (reply, rx) = oneshot::channel();
        self.registry
            .send(RegistryCmd::Lookup {
                id: id.to_owned(),
                reply,
            })
            .await
            .expect("registry running");
        rx.await
            .expect("registry replies")
            .ok_or_else(|| SessionError::SessionUnknown(id.to_owned()))
    }

    async fn ask<T>(
        &self,
        id: &str,
        make: impl FnOnce(Reply<T>) -> SessionCmd,
    ) -> Result<T, SessionError> {
        let tx = self.session(id).await?;
        let (reply, rx) = oneshot::channel();
        tx.send(make(reply)).await.expect("session running");
        rx.await.expect("session replies")
    }

    pub async fn read_range(&self, id: &str, offset: u64, length: u64) -> Result<RangeView, SessionError> {
        self.ask(id, |reply| SessionCmd::Read {
            offset,
            length,
            reply,
        })
        .await
    }

    pub async fn apply_patch(&self, id: &str, offset: u64, value: u8) -> Result<bool, SessionError> {
        self.ask(id, |reply| SessionCmd::Patch {
            offset,
            value,
            reply,
        })
        .await
    }

    pub async fn save(&self, id: &str) -> Result<bool, SessionError> {
        self.ask(id, |reply| SessionCmd::Save { reply }).await
    }
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    error: &'static str,
    detail: String,
}

impl ApiError {
    fn bad_request(detail: impl ToString) -> ApiError {
        ApiError {
            status: StatusCode::BAD_REQUEST,
            error: "BadRequest",
            detail: detail.to_string(),
        }
    }
}

impl From<SessionError> for ApiError {
    fn from(e: SessionError) -> Self {
        let status = match e {
            SessionError::NotFound(_) | SessionError::SessionUnknown(_) => StatusCode::NOT_FOUND,
            SessionError::PermissionDenied(_) | SessionError::OutOfRange { .. } => {
                StatusCode::BAD_REQUEST
            }
            SessionError::Io { .. } => StatusCode::CONFLICT,
        };
        ApiError {
            status,
            error: e.kind(),
            detail: e.to_string(),
        }
    }
}

impl From<JsonRejection> for ApiError {
    fn from(e: JsonRejection) -> Self {
        ApiError::bad_request(e.body_text())
    }
}

impl From<QueryRejection> for ApiError {
    fn from(e: QueryRejection) -> Self {
        ApiError::bad_request(e.body_text())
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (
            self.status,
            Json(json!({ "error": self.error, "detail": self.detail })),
        )
            .into_response()
    }
}

#[derive(Deserialize)]
struct OpenBody {
    path: PathBuf,
}

#[derive(Deserialize)]
struct RangeQuery {
    offset: u64,
    length: u64,
}

#[derive(Deserialize)]
struct PatchBody {
    offset: u64,
    value: u8,
}

async fn open_session(
    State(editor): State<Editor>,
    body: Result<Json<OpenBody>, JsonRejection>,
) -> Result<Response, ApiError> {
    let Json(body) = body?;
    let (id, length) = editor.open(body.path).await?;
    Ok((StatusCode::CREATED, Json(json!({ "id": id, "length": length }))).into_response())
}

async fn read_range(
    State(editor): State<Editor>,
    Path(id): Path<String>,
    query: Result<Query<RangeQuery>, QueryRejection>,
) -> Result<Json<RangeView>, ApiError> {
    let Query(q) = query?;
    Ok(Json(editor.read_range(&id, q.offset, q.length).await?))
}

async fn apply_patch(
    State(editor): State<Editor>,
    Path(id): Path<String>,
    body: Result<Json<PatchBody>, JsonRejection>,
) -> Result<Json<serde_json::Value>, ApiError> {
    let Json(body) = body?;
    let dirty = editor.apply_patch(&id, body.offset, body.value).await?;
    Ok(Json(json!({ "dirty": dirty })))
}

async fn save_session(
    State(editor): State<Editor>,
    Path(id): Path<String>,
) -> Result<Json<serde_json::Value>, ApiError> {
    let dirty = editor.save(&id).await?;
    Ok(Json(json!({ "dirty": dirty })))
}

async fn glyph_svg(Path(file): Path<String>) -> Result<Response, ApiError> {
    let byte = file
        .strip_suffix(".svg")
        .filter(|hex| hex.len() == 2)
        .and_then(|hex| u8::from_str_radix(hex, 16).ok())
        .ok_or_else(|| ApiError {
            status: StatusCode::NOT_FOUND,
            error: "NotFound",
            detail: format!("{file}: expected two hex digits followed by .svg"),
        })?;
    let doc = to_svg(&ligature_grid(ByteValue(byte), &StyleProfile::default()));
    Ok(([(header::CONTENT_TYPE, "image/svg+xml")], doc.into_string()).into_response())
}

pub fn router(editor: Editor) -> Router {
    Router::new()
        .route("/api/sessions", post(open_session))
        .route("/api/sessions/{id}", patch(apply_patch))
        .route("/api/sessions/{id}/range", get(read_range))
        .route("/api/sessions/{id}/save", post(save_session))
        .route("/api/glyph/{file}", get(glyph_svg))
        .with_state(editor)
}

/// Binds to localhost (port 0 picks an ephemeral port), reports the bound
/// address through `on_bound`, and serves until the process ends.
pub async fn serve(port: u16, on_bound: impl FnOnce(SocketAddr)) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(("127.0.0.1", port)).await?;
    on_bound(listener.local_addr()?);
    axum::serve(listener, router(Editor::spawn())).await
}
