/** Wires the chat screen: session selection, the input box, the flags
 * drawer, and the catalog browser.  One turn in flight at a time; the
 * input is disabled until the server answers. */

import { createSession, fetchCatalog, fetchSession, listSessions, postUtterance } from './api'
import { renderCatalog, renderChatEntry, renderTurnPanel } from './render'
import type { SituationFlags, TurnResponse } from './types'

export interface AppElements {
  transcript: HTMLElement
  panel: HTMLElement
  input: HTMLInputElement
  sendButton: HTMLButtonElement
  sessionSelect: HTMLSelectElement
  newSessionButton: HTMLButtonElement
  personInput: HTMLInputElement
  catalogBox: HTMLElement
  flagsForm: HTMLFormElement
  status: HTMLElement
}

export class ConciergeApp {
  private sessionId: string | null = null
  private inFlight = false

  constructor(private ui: AppElements) {}

  async start(): Promise<void> {
    this.ui.sendButton.addEventListener('click', () => void this.send())
    this.ui.input.addEventListener('keydown', (event) => {
      if (event.key === 'Enter') void this.send()
    })
    this.ui.newSessionButton.addEventListener('click', () => void this.newSession())
    this.ui.sessionSelect.addEventListener('change', () => {
      const picked = this.ui.sessionSelect.value
      if (picked) void this.attach(picked)
    })
    await this.refreshSessions()
    try {
      this.ui.catalogBox.replaceChildren(renderCatalog(await fetchCatalog()))
    } catch (error) {
      this.setStatus(`catalog unavailable: ${(error as Error).message}`)
    }
    if (!this.sessionId) await this.newSession()
  }

  currentSession(): string | null {
    return this.sessionId
  }

  private setStatus(text: string): void {
    this.ui.status.textContent = text
  }

  private async refreshSessions(): Promise<void> {
    try {
      const ids = await listSessions()
      this.ui.sessionSelect.replaceChildren(
        new Option('select session…', ''),
        ...ids.map((id) => new Option(id, id)),
      )
    } catch (error) {
      this.setStatus(`cannot list sessions: ${(error as Error).message}`)
    }
  }

  async newSession(): Promise<void> {
    const person = this.ui.personInput.value.trim() || undefined
    const created = await createSession(person)
    await this.refreshSessions()
    await this.attach(created.session_id)
  }

  async attach(sessionId: string): Promise<void> {
    this.sessionId = sessionId
    this.ui.sessionSelect.value = sessionId
    this.ui.transcript.replaceChildren()
    const view = await fetchSession(sessionId)
    for (const turn of view.history) {
      this.ui.transcript.appendChild(renderChatEntry('user', turn.utterance))
      this.ui.transcript.appendChild(renderChatEntry('concierge', turn.reply))
    }
    this.setStatus(`session ${sessionId} (${view.turns} turns, mood ${view.mood})`)
  }

  readFlags(): SituationFlags | undefined {
    const data = new FormData(this.ui.flagsForm)
    const flags: SituationFlags = {
      target: String(data.get('target') ?? 'self'),
      other_fortune: String(data.get('other_fortune') ?? 'none'),
      prospect: String(data.get('prospect') ?? 'none'),
      agent: String(data.get('agent') ?? 'none'),
      approval: String(data.get('approval') ?? 'none'),
    }
    const isDefault =
      flags.target === 'self' &&
      flags.other_fortune === 'none' &&
      flags.prospect === 'none' &&
      flags.agent === 'none' &&
      flags.approval === 'none'
    return isDefault ? undefined : flags
  }

  async send(): Promise<TurnResponse | null> {
    const text = this.ui.input.value.trim()
    if (!text || !this.sessionId || this.inFlight) return null
    this.inFlight = true
    this.ui.input.disabled = true
    this.ui.sendButton.disabled = true
    this.ui.transcript.appendChild(renderChatEntry('user', text))
    try {
      const turn = await postUtterance(this.sessionId, text, this.readFlags())
      this.ui.transcript.appendChild(renderChatEntry('concierge', turn.reply))
      this.ui.panel.replaceChildren(renderTurnPanel(turn))
      this.ui.input.value = ''
      this.setStatus(`mood ${turn.mood} · ${turn.fired_rules.join(', ') || 'no rules fired'}`)
      return turn
    } catch (error) {
      this.setStatus(`turn failed: ${(error as Error).message}`)
      return null
    } finally {
      this.inFlight = false
      this.ui.input.disabled = false
      this.ui.sendButton.disabled = false
      this.ui.input.focus()
    }
  }
}
