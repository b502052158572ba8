/** API payload types, mirroring the server's response models. */

export interface EmotionView {
  emotion: string | null
  valence: 'Pleasure' | 'Displeasure' | 'Neutral'
  intensity: number
}

export interface RecommendationView {
  kind: 'Spot' | 'Food' | 'Gift'
  id: string
  name: string
  strength: number
  fired_rules: string[]
  rationale: string
}

export interface TurnResponse {
  reply: string
  directive: string
  case_route: string
  emotion: EmotionView
  profile: number[]
  mood: string
  recommendations: RecommendationView[]
  taboo: string[]
  fired_rules: string[]
}

export interface TurnSummary {
  utterance: string
  case_route: string
  emotion: string | null
  valence: string
  intensity: number
  mood_after: string
  reply: string
  fired_rules: string[]
  recommendations: RecommendationView[]
}

export interface SessionView {
  session_id: string
  person_id: string | null
  mood: string
  profile: number[]
  taboo: string[]
  turns: number
  history: TurnSummary[]
}

export interface CatalogItem {
  id: string
  name: string
  nearby: string[]
  area?: string
}

export interface Catalog {
  spots: CatalogItem[]
  foods: CatalogItem[]
  gifts: CatalogItem[]
}

export interface SituationFlags {
  target: string
  other_fortune: string
  prospect: string
  agent: string
  approval: string
}

/** Fixed emotion enumeration; chart bar order must match the server's. */
export const EMOTION_ORDER = [
  'joy', 'distress', 'happy-for', 'gloating', 'resentment', 'sorry-for',
  'hope', 'fear', 'satisfaction', 'relief', 'fears-confirmed',
  'disappointment', 'pride', 'admiration', 'shame', 'disliking',
  'gratitude', 'anger', 'gratification', 'remorse',
] as const
