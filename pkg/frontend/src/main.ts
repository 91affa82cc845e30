/** App bootstrap: tabs, error banner, shareable composer URLs. */

import { api } from './api';
import { CatalogView } from './catalogView';
import { Composer } from './composer';
import { clear, el } from './dom';
import { decodeState, encodeState } from './state';
import { renderTree } from './taxonomyView';
import './styles.css';

type Tab = 'composer' | 'taxonomy' | 'catalog';

function showBanner(message: string): void {
  const banner = document.querySelector<HTMLElement>('#banner');
  if (!banner) return;
  banner.textContent = message;
  banner.hidden = false;
  window.setTimeout(() => {
    banner.hidden = true;
  }, 6000);
}

async function mountTaxonomyTab(root: HTMLElement): Promise<void> {
  try {
    const { version, roots } = await api.taxonomy();
    clear(root);
    root.append(
      el('h2', {}, `Pattern taxonomy (version ${version})`),
      renderTree(roots),
    );
  } catch {
    showBanner('cannot load the pattern taxonomy from the server');
  }
}

export async function start(root: HTMLElement): Promise<void> {
  const nav = el('nav', {},
    el('button', { type: 'button', 'data-tab': 'composer' }, 'Composer'),
    el('button', { type: 'button', 'data-tab': 'taxonomy' }, 'Taxonomy'),
    el('button', { type: 'button', 'data-tab': 'catalog' }, 'Catalog'),
  );
  const banner = el('div', { id: 'banner' });
  banner.hidden = true;
  const panes = {
    composer: el('main', { id: 'composer-pane' }),
    taxonomy: el('main', { id: 'taxonomy-pane' }),
    catalog: el('main', { id: 'catalog-pane' }),
  };
  root.append(el('h1', {}, 'Hiding-method descriptor composer'), nav, banner,
    panes.composer, panes.taxonomy, panes.catalog);

  const composer = new Composer(
    panes.composer,
    api,
    decodeState(window.location.search),
    {
      onError: showBanner,
      onStateChange: (state) => {
        const query = encodeState(state);
        const url = query ? `?${query}` : window.location.pathname;
        window.history.replaceState(null, '', url);
      },
    },
  );
  const catalog = new CatalogView(panes.catalog, api, showBanner);

  const select = (tab: Tab) => {
    for (const [name, pane] of Object.entries(panes)) {
      pane.hidden = name !== tab;
    }
    if (tab === 'taxonomy') void mountTaxonomyTab(panes.taxonomy);
    if (tab === 'catalog') void catalog.reload();
  };
  nav.addEventListener('click', (event) => {
    const target = event.target as HTMLElement;
    const tab = target.getAttribute('data-tab') as Tab | null;
    if (tab) select(tab);
  });

  await composer.mount();
  await catalog.mount().catch(() => showBanner('catalog unavailable'));
  select('composer');
}

const appRoot = document.querySelector<HTMLElement>('#app');
if (appRoot) {
  void start(appRoot);
}
