@Component({
    selector: 'app-user',
    template: '<p>Name: {{ name }}</p>'
})
export class UserComponent {
    name: string = 'Bob';
}
