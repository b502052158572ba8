import { ConciergeApp } from './app'

function need<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id)
  if (!node) throw new Error(`missing element #${id}`)
  return node as T
}

const app = new ConciergeApp({
  transcript: need('transcript'),
  panel: need('panel'),
  input: need<HTMLInputElement>('utterance'),
  sendButton: need<HTMLButtonElement>('send'),
  sessionSelect: need<HTMLSelectElement>('session-select'),
  newSessionButton: need<HTMLButtonElement>('new-session'),
  personInput: need<HTMLInputElement>('person'),
  catalogBox: need('catalog'),
  flagsForm: need<HTMLFormElement>('flags'),
  status: need('status'),
})

void app.start()
