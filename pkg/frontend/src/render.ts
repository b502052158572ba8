/** Pure DOM builders for the per-turn panel and chat transcript.
 * Everything renders straight from API responses; no scoring or
 * recommendation logic lives on the client. */

import { EMOTION_ORDER } from './types'
import type { Catalog, EmotionView, RecommendationView, TurnResponse } from './types'

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag)
  if (className) node.className = className
  if (text !== undefined) node.textContent = text
  return node
}

export function renderEmotionBadge(emotion: EmotionView): HTMLElement {
  const badge = el('span', `badge valence-${emotion.valence.toLowerCase()}`)
  const label = emotion.emotion ?? 'neutral'
  badge.textContent = `${label} · ${emotion.intensity.toFixed(2)}`
  badge.title = emotion.valence
  return badge
}

export function renderMoodBadge(mood: string): HTMLElement {
  return el('span', `badge mood-${mood}`, mood)
}

/** 20 bars, one per emotion, in the server's enumeration order. */
export function renderProfileChart(profile: number[]): HTMLElement {
  const chart = el('div', 'profile-chart')
  EMOTION_ORDER.forEach((name, i) => {
    const row = el('div', 'profile-row')
    row.dataset.emotion = name
    const label = el('span', 'profile-label', name)
    const track = el('div', 'profile-track')
    const bar = el('div', 'profile-bar')
    const value = profile[i] ?? 0
    bar.style.width = `${Math.round(value * 100)}%`
    bar.dataset.value = value.toFixed(3)
    track.appendChild(bar)
    row.append(label, track)
    chart.appendChild(row)
  })
  return chart
}

export function renderRecommendationCard(rec: RecommendationView): HTMLElement {
  const card = el('div', `rec-card kind-${rec.kind.toLowerCase()}`)
  card.dataset.id = rec.id
  const head = el('div', 'rec-head')
  head.append(el('span', 'rec-kind', rec.kind), el('span', 'rec-name', rec.name))
  const track = el('div', 'strength-track')
  const bar = el('div', 'strength-bar')
  bar.style.width = `${Math.round(rec.strength * 100)}%`
  bar.dataset.value = rec.strength.toFixed(3)
  track.appendChild(bar)
  const meta = el('div', 'rec-rationale', rec.rationale)
  const rules = el('div', 'rec-rules', rec.fired_rules.join(' '))
  card.append(head, track, meta, rules)
  return card
}

export function renderTabooChips(taboo: string[]): HTMLElement {
  const box = el('div', 'taboo-chips')
  for (const term of taboo) {
    box.appendChild(el('span', 'chip taboo-chip', term))
  }
  return box
}

/** The per-turn side panel: emotion, mood, chart, cards, taboo. */
export function renderTurnPanel(turn: TurnResponse): HTMLElement {
  const panel = el('div', 'turn-panel')

  const badges = el('div', 'badges')
  badges.append(renderEmotionBadge(turn.emotion), renderMoodBadge(turn.mood))
  panel.appendChild(badges)

  panel.appendChild(renderProfileChart(turn.profile))

  const recs = el('div', 'rec-list')
  for (const rec of turn.recommendations) {
    recs.appendChild(renderRecommendationCard(rec))
  }
  panel.appendChild(recs)

  panel.appendChild(renderTabooChips(turn.taboo))

  const rules = el('div', 'fired-rules', turn.fired_rules.length ? `rules: ${turn.fired_rules.join(', ')}` : '')
  panel.appendChild(rules)
  return panel
}

export function renderChatEntry(author: 'user' | 'concierge', text: string): HTMLElement {
  const entry = el('div', `chat-entry from-${author}`)
  entry.append(el('span', 'chat-author', author), el('span', 'chat-text', text))
  return entry
}

export function renderCatalog(catalog: Catalog): HTMLElement {
  const view = el('div', 'catalog-view')
  const sections: Array<[string, Catalog['spots']]> = [
    ['Spots', catalog.spots],
    ['Foods', catalog.foods],
    ['Gifts', catalog.gifts],
  ]
  for (const [title, items] of sections) {
    const section = el('section', 'catalog-section')
    section.appendChild(el('h3', undefined, title))
    const list = el('ul')
    for (const item of items) {
      const li = el('li')
      li.dataset.id = item.id
      li.textContent = item.nearby.length ? `${item.name} (near ${item.nearby.join(', ')})` : item.name
      list.appendChild(li)
    }
    section.appendChild(list)
    view.appendChild(section)
  }
  return view
}
