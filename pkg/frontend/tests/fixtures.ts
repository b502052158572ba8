/** A TurnResponse recorded from the live service
 * (`concierge once --text "the restaurant was closed" --json`). */

import type { Catalog, TurnResponse } from '../src/types'

export const RECORDED_TURN: TurnResponse = {
  reply:
    'I hear you. Maybe we could talk about Okonomiyaki instead? favorite value +0.90; near Shukukeien Garden, Hondori Arcade',
  directive: 'continue_talk',
  case_route: 'CASE3',
  emotion: {
    emotion: 'distress',
    valence: 'Displeasure',
    intensity: 0.5768998281229634,
  },
  profile: [
    0.0, 0.2884499140614817, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
  ],
  mood: 'sad',
  recommendations: [
    {
      kind: 'Food',
      id: 'okonomiyaki',
      name: 'Okonomiyaki',
      strength: 0.8224122807017544,
      fired_rules: ['R7'],
      rationale: 'favorite value +0.90; near Shukukeien Garden, Hondori Arcade',
    },
    {
      kind: 'Spot',
      id: 'miyajima',
      name: 'Miyajima',
      strength: 0.808157894736842,
      fired_rules: ['R7'],
      rationale: 'favorite value +0.70',
    },
    {
      kind: 'Gift',
      id: 'momiji_manju',
      name: 'Momiji Manju',
      strength: 0.808157894736842,
      fired_rules: ['R7'],
      rationale: 'favorite value +0.70; near Miyajima, Hondori Arcade',
    },
  ],
  taboo: ['closed'],
  fired_rules: ['R7'],
}

export const RECORDED_CATALOG: Catalog = {
  spots: [
    { id: 'miyajima', name: 'Miyajima', nearby: [], area: 'miyajima' },
    { id: 'hiroshima_castle', name: 'Hiroshima Castle', nearby: ['shukukeien', 'hondori'], area: 'central' },
  ],
  foods: [{ id: 'okonomiyaki', name: 'Okonomiyaki', nearby: ['shukukeien', 'hondori'] }],
  gifts: [{ id: 'momiji_manju', name: 'Momiji Manju', nearby: ['miyajima', 'hondori'] }],
}
