/** Collapsible taxonomy tree; used by the browser tab and as the pattern
 * picker inside the composer. */

import type { TaxonomyNode } from './api';
import { el } from './dom';

export interface TreeOptions {
  onPick?: (node: TaxonomyNode) => void;
  /** Restrict to one code-kind prefix ('E' or 'R'); empty shows all. */
  kind?: 'E' | 'R' | '';
}

function renderNode(node: TaxonomyNode, options: TreeOptions): HTMLElement {
  const label = el(
    'span',
    { class: 'tree-label' },
    el('code', {}, node.code),
    ' ',
    node.name,
    node.domain !== 'generic' ? el('small', {}, ` (${node.domain})`) : null,
  );
  if (options.onPick) {
    label.append(
      ' ',
      el('button', {
        type: 'button',
        class: 'pick',
        'data-code': node.code,
        click: () => options.onPick?.(node),
      }, 'add'),
    );
  }
  if (node.children.length === 0) {
    return el('li', { class: 'leaf', 'data-code': node.code }, label);
  }
  const children = el(
    'ul',
    {},
    ...node.children.map((child) => renderNode(child, options)),
  );
  const details = el('details', { 'data-code': node.code }, el('summary', {}, label), children);
  return el('li', {}, details);
}

export function renderTree(roots: TaxonomyNode[], options: TreeOptions = {}): HTMLElement {
  const filtered = options.kind
    ? roots.filter((node) => node.code.startsWith(options.kind!))
    : roots;
  return el('ul', { class: 'taxonomy-tree' }, ...filtered.map((node) => renderNode(node, options)));
}

export function describeNode(node: TaxonomyNode): HTMLElement {
  return el(
    'div',
    { class: 'record-detail' },
    el('h3', {}, `${node.code} ${node.name}`),
    el('p', {}, node.description),
    el('p', {}, el('small', {}, `domain: ${node.domain}`)),
  );
}
