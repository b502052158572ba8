import { afterEach, beforeEach, describe, expect, it, vi } from 'vitest'

import { createSession, fetchCatalog, postUtterance } from '../src/api'
import { RECORDED_TURN } from './fixtures'

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { 'Content-Type': 'application/json' },
  })
}

describe('api client', () => {
  beforeEach(() => {
    vi.stubGlobal('fetch', vi.fn())
  })

  afterEach(() => {
    vi.unstubAllGlobals()
  })

  it('posting an utterance issues exactly one API call', async () => {
    const mock = fetch as ReturnType<typeof vi.fn>
    mock.mockResolvedValueOnce(jsonResponse(RECORDED_TURN))
    const turn = await postUtterance('abc', 'the restaurant was closed')
    expect(mock).toHaveBeenCalledTimes(1)
    const [url, init] = mock.mock.calls[0]
    expect(String(url)).toContain('/api/v1/sessions/abc/utterances')
    expect(init.method).toBe('POST')
    expect(JSON.parse(init.body)).toEqual({ text: 'the restaurant was closed' })
    expect(turn.mood).toBe('sad')
  })

  it('flags ride along only when provided', async () => {
    const mock = fetch as ReturnType<typeof vi.fn>
    mock.mockResolvedValueOnce(jsonResponse(RECORDED_TURN))
    await postUtterance('abc', 'go to miyajima', {
      target: 'self',
      other_fortune: 'none',
      prospect: 'prospective',
      agent: 'none',
      approval: 'none',
    })
    const body = JSON.parse(mock.mock.calls[0][1].body)
    expect(body.flags.prospect).toBe('prospective')
  })

  it('createSession posts person id', async () => {
    const mock = fetch as ReturnType<typeof vi.fn>
    mock.mockResolvedValueOnce(jsonResponse({ session_id: 's1', mood: 'neutral' }, 201))
    const created = await createSession('alice')
    expect(created.session_id).toBe('s1')
    expect(JSON.parse(mock.mock.calls[0][1].body)).toEqual({ person_id: 'alice' })
  })

  it('errors surface the server message', async () => {
    const mock = fetch as ReturnType<typeof vi.fn>
    mock.mockResolvedValueOnce(
      jsonResponse({ code: 'not-found', message: "no session 'ghost'" }, 404),
    )
    await expect(postUtterance('ghost', 'hello')).rejects.toThrow(/no session 'ghost'/)
  })

  it('fetchCatalog hits the catalog endpoint once', async () => {
    const mock = fetch as ReturnType<typeof vi.fn>
    mock.mockResolvedValueOnce(jsonResponse({ spots: [], foods: [], gifts: [] }))
    await fetchCatalog()
    expect(mock).toHaveBeenCalledTimes(1)
    expect(String(mock.mock.calls[0][0])).toContain('/api/v1/catalog')
  })
})
