/** REST client for the concierge session service. */

import { apiBase } from './config'
import type { Catalog, SessionView, SituationFlags, TurnResponse } from './types'

async function expectOk(res: Response): Promise<Response> {
  if (!res.ok) {
    let detail = `${res.status}`
    try {
      const body = await res.json()
      detail = body.message ?? body.detail ?? detail
    } catch {
      /* non-JSON error body */
    }
    throw new Error(`request failed: ${detail}`)
  }
  return res
}

export async function createSession(personId?: string): Promise<{ session_id: string; mood: string }> {
  const res = await fetch(`${apiBase()}/api/v1/sessions`, {
    method: 'POST',
    headers: { 'Content-Type': 'application/json' },
    body: JSON.stringify(personId ? { person_id: personId } : {}),
  })
  return (await expectOk(res)).json()
}

export async function listSessions(): Promise<string[]> {
  const res = await fetch(`${apiBase()}/api/v1/sessions`)
  return (await expectOk(res)).json()
}

export async function fetchSession(sessionId: string): Promise<SessionView> {
  const res = await fetch(`${apiBase()}/api/v1/sessions/${sessionId}`)
  return (await expectOk(res)).json()
}

export async function deleteSession(sessionId: string): Promise<void> {
  const res = await fetch(`${apiBase()}/api/v1/sessions/${sessionId}`, { method: 'DELETE' })
  await expectOk(res)
}

export async function postUtterance(
  sessionId: string,
  text: string,
  flags?: SituationFlags,
): Promise<TurnResponse> {
  const body: { text: string; flags?: SituationFlags } = { text }
  if (flags) body.flags = flags
  const res = await fetch(`${apiBase()}/api/v1/sessions/${sessionId}/utterances`, {
    method: 'POST',
    headers: { 'Content-Type': 'application/json' },
    body: JSON.stringify(body),
  })
  return (await expectOk(res)).json()
}

export async function fetchCatalog(): Promise<Catalog> {
  const res = await fetch(`${apiBase()}/api/v1/catalog`)
  return (await expectOk(res)).json()
}
